use fixedbitset::FixedBitSet;

/// Which set of naturals `mex` draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MexDomain {
    /// `{0, 1, 2, ..}`
    #[default]
    Natural,
    /// `{1, 2, 3, ..}`
    Positive,
}

impl MexDomain {
    fn start(self) -> u64 {
        match self {
            MexDomain::Natural => 0,
            MexDomain::Positive => 1,
        }
    }
}

/// Least element of the domain that is not in `values`.
pub fn mex<I: IntoIterator<Item = u64>>(values: I, domain: MexDomain) -> u64 {
    let mut set = MexSet::new(domain);
    for v in values {
        set.insert(v);
    }
    set.mex()
}

/// Growing set of naturals with an amortized O(1) `mex`.
///
/// The cursor only moves forward, so callers that insert the current mex (or
/// anything above it) never pay more than one pass over the bitset.
#[derive(Debug, Clone)]
pub struct MexSet {
    bits: FixedBitSet,
    cursor: u64,
}

impl MexSet {
    pub fn new(domain: MexDomain) -> Self {
        MexSet {
            bits: FixedBitSet::with_capacity(64),
            cursor: domain.start(),
        }
    }

    pub fn insert(&mut self, v: u64) {
        let i = v as usize;
        if i >= self.bits.len() {
            self.bits.grow((i + 1).max(2 * self.bits.len()));
        }
        self.bits.insert(i);
    }

    pub fn contains(&self, v: u64) -> bool {
        self.bits.contains(v as usize)
    }

    pub fn mex(&mut self) -> u64 {
        while self.bits.contains(self.cursor as usize) {
            self.cursor += 1;
        }
        self.cursor
    }
}
