//! Non-homogeneous Beatty sequences and their complementarity conditions.

use alloc::vec::Vec;

use super::quadratic::QuadraticIrrational as Q;
use crate::error::{Error, Result};
use crate::substitution::Letter;

/// `floor(kk * alpha + gamma)`, computed without floating point.
pub fn beatty_floor(alpha: &Q, gamma: &Q, kk: u64) -> Result<i128> {
    if !alpha.is_irrational() {
        return Err(Error::InvalidParameter("Beatty slope must be irrational"));
    }
    Ok(alpha.scale(kk as i128)?.checked_add(gamma)?.floor())
}

/// Slopes and offsets of a pair `A_k = floor(k alpha + gamma)`,
/// `B_k = floor(k beta + delta)`, indexed from `k = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeattyPair {
    pub alpha: Q,
    pub beta: Q,
    pub gamma: Q,
    pub delta: Q,
}

impl BeattyPair {
    pub fn a(&self, k: u64) -> Result<i128> {
        beatty_floor(&self.alpha, &self.gamma, k)
    }

    pub fn b(&self, k: u64) -> Result<i128> {
        beatty_floor(&self.beta, &self.delta, k)
    }

    /// First `n` terms of both sequences.
    pub fn rows(&self, n: usize) -> Result<(Vec<u64>, Vec<u64>)> {
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for k in 1..=n as u64 {
            a.push(u64::try_from(self.a(k)?).map_err(|_| Error::Overflow)?);
            b.push(u64::try_from(self.b(k)?).map_err(|_| Error::Overflow)?);
        }
        Ok((a, b))
    }

    /// Number of terms needed for both rows to pass `bound`.
    pub fn terms_covering(&self, bound: u64) -> Result<usize> {
        // A_k >= k, so `bound + 1` terms always suffice; trim by the slope.
        let k = Q::integer(bound as i128 + 1, self.alpha.d())?
            .checked_div(&self.alpha)?
            .ceil();
        Ok(k.max(1) as usize + 1)
    }
}

/// Detailed outcome of [`skolem_fraenkel_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkolemFraenkelReport {
    /// `alpha` and `beta` are irrational and exceed 1.
    pub slopes_valid: bool,
    /// `1/alpha + 1/beta = 1`.
    pub reciprocal_sum: bool,
    /// `gamma/alpha + delta/beta = 0`.
    pub offset_balance: bool,
    /// `gamma < 1` and `delta < 1`, so no term falls below 1.
    pub offsets_bounded: bool,
    /// No `k alpha + gamma` or `k beta + delta` is a positive integer.
    pub no_integer_hits: bool,
    /// `floor(alpha + gamma)`, the first term of `A`.
    pub first_a: i128,
}

impl SkolemFraenkelReport {
    pub fn holds(&self) -> bool {
        self.slopes_valid
            && self.reciprocal_sum
            && self.offset_balance
            && self.offsets_bounded
            && self.no_integer_hits
    }
}

fn integer_hit(slope: &Q, offset: &Q) -> Result<bool> {
    match slope.rational_multiple(offset) {
        None => Ok(false),
        Some(m) => {
            let v = slope.scale(m)?.checked_add(offset)?;
            Ok(v.is_integer() && v.p() >= 1)
        }
    }
}

/// Evaluates the complementarity conditions exactly.
///
/// With `A` and `B` indexed from 1, the counting functions of the two rows
/// add up to `N` for every `N` precisely when the reciprocal slopes sum to 1,
/// `gamma/alpha + delta/beta = 0`, both offsets stay below 1, and no
/// `k alpha + gamma` or `k beta + delta` lands on a positive integer.
pub fn skolem_fraenkel_report(pair: &BeattyPair) -> Result<SkolemFraenkelReport> {
    let d = pair.alpha.d();
    let one = Q::integer(1, d)?;
    let zero = Q::integer(0, d)?;
    let slopes_valid = pair.alpha.is_irrational()
        && pair.beta.is_irrational()
        && pair.alpha > one
        && pair.beta > one;
    let reciprocal_sum =
        slopes_valid && pair.alpha.recip()?.checked_add(&pair.beta.recip()?)? == one;
    let offset_balance = slopes_valid
        && pair
            .gamma
            .checked_div(&pair.alpha)?
            .checked_add(&pair.delta.checked_div(&pair.beta)?)?
            == zero;
    let offsets_bounded = pair.gamma < one && pair.delta < one;
    let no_integer_hits = slopes_valid
        && !integer_hit(&pair.alpha, &pair.gamma)?
        && !integer_hit(&pair.beta, &pair.delta)?;
    Ok(SkolemFraenkelReport {
        slopes_valid,
        reciprocal_sum,
        offset_balance,
        offsets_bounded,
        no_integer_hits,
        first_a: pair.alpha.checked_add(&pair.gamma)?.floor(),
    })
}

/// True when the pair's rows are complementary, decided exactly.
pub fn skolem_fraenkel_check(pair: &BeattyPair) -> bool {
    skolem_fraenkel_report(pair).is_ok_and(|r| r.holds())
}

/// The pair with `beta - alpha = a` and `B_k - A_k = (k-1) a + b` for
/// `k = 1, 2, ..`.
///
/// `alpha = (2 - a + sqrt(a^2 + 4)) / 2` is the root of
/// `x^2 + (a-2) x - a = 0`. With `c = b - a` the offsets are
/// `gamma = -c / beta` and `delta = gamma + c`. `b = a` gives a-Wythoff;
/// `b = a + 1` is admitted as well.
pub fn wythoff_ab_params(a: u32, b: u32) -> Result<BeattyPair> {
    if a == 0 || b == 0 || b > a + 1 {
        return Err(Error::InvalidParameter("need a >= 1 and 0 < b <= a + 1"));
    }
    let a = a as i128;
    let alpha = Q::new(2 - a, 1, a * a + 4, 2)?;
    let beta = alpha.add_integer(a)?;
    let c = Q::integer(b as i128 - a, alpha.d())?;
    let gamma = c.neg().checked_div(&beta)?;
    let delta = gamma.checked_add(&c)?;
    Ok(BeattyPair {
        alpha,
        beta,
        gamma,
        delta,
    })
}

fn check_sturmian_params(rho: &Q, x: &Q) -> Result<()> {
    let d = rho.d();
    let zero = Q::integer(0, d)?;
    let one = Q::integer(1, d)?;
    if !rho.is_irrational() || *rho <= zero || *rho >= one {
        return Err(Error::InvalidParameter("rho must be irrational in (0, 1)"));
    }
    if *x < zero || *x >= one {
        return Err(Error::InvalidParameter("x must lie in [0, 1)"));
    }
    Ok(())
}

/// First `n` letters `u_k = floor(k rho + x) - floor((k-1) rho + x)`.
pub fn sturmian_word(rho: &Q, x: &Q, n: usize) -> Result<Vec<Letter>> {
    check_sturmian_params(rho, x)?;
    let mut prev = x.floor();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n as i128 {
        let cur = rho.scale(k)?.checked_add(x)?.floor();
        out.push(Letter((cur - prev) as u8));
        prev = cur;
    }
    Ok(out)
}

/// 1-based locations of the first `n` occurrences of `letter` in the
/// Sturmian word, from closed forms.
///
/// The `m`-th 1 sits at `ceil((m - x) / rho)` and the `m`-th 0 at
/// `floor((m - 1 + x) / (1 - rho)) + 1`.
pub fn sturmian_locations(rho: &Q, x: &Q, letter: Letter, n: usize) -> Result<Vec<u64>> {
    check_sturmian_params(rho, x)?;
    let d = rho.d();
    let mut out = Vec::with_capacity(n);
    for m in 1..=n as i128 {
        let loc = match letter.0 {
            1 => Q::integer(m, d)?.checked_sub(x)?.checked_div(rho)?.ceil(),
            0 => {
                let gap = Q::integer(1, d)?.checked_sub(rho)?;
                x.add_integer(m - 1)?.checked_div(&gap)?.floor() + 1
            }
            _ => {
                return Err(Error::InvalidLetter {
                    letter: letter.0,
                    alphabet_size: 2,
                })
            }
        };
        out.push(loc as u64);
    }
    Ok(out)
}

/// `floor(k (rho + 1) + x)` for `k = 1..=n`: the Beatty sequence whose gaps,
/// minus one, spell the Sturmian word.
pub fn sturmian_mechanical_positions(rho: &Q, x: &Q, n: usize) -> Result<Vec<u64>> {
    check_sturmian_params(rho, x)?;
    let slope = rho.add_integer(1)?;
    (1..=n as u64)
        .map(|k| beatty_floor(&slope, x, k).map(|v| v as u64))
        .collect()
}
