//! Brute-force oracles certifying that constructed sets avoid the claimed
//! configurations. Deliberately independent of the search module's clique
//! machinery: the exact r_k oracle here enumerates subsets directly.

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::construct::ConstructedSet;
use crate::error::{Error, Result};
use crate::residue::{is_prime, power_residues, ResidueSet, UnivariatePolynomial};
use crate::search::{r_k, Budget};

/// Memory guard for sieve bitmaps.
pub const SIEVE_LIMIT: u64 = 100_000_000;

/// Subset-enumeration oracle limit.
pub const BRUTE_FORCE_LIMIT: u64 = 40;

const SAMPLE_PAIRS: u64 = 1_000_000;

/// Membership bitmap over [0, len].
#[derive(Clone, Debug)]
pub struct Bitmap {
    words: Vec<u64>,
    len: u64,
}

impl Bitmap {
    pub fn new(len: u64) -> Self {
        Bitmap { words: vec![0; (len as usize + 1).div_ceil(64)], len }
    }

    pub fn mark(&mut self, v: u64) {
        debug_assert!(v <= self.len);
        self.words[(v / 64) as usize] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: u64) -> bool {
        if v > self.len {
            return false;
        }
        self.words[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter_set(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.len).filter(|&v| self.contains(v))
    }

    /// self |= other << shift, truncated to len.
    fn or_shifted(&mut self, other: &Bitmap, shift: u64) {
        let word_shift = (shift / 64) as usize;
        let bit_shift = shift % 64;
        let n = self.words.len();
        for i in (0..n.saturating_sub(word_shift)).rev() {
            let mut w = other.words[i] << bit_shift;
            if bit_shift > 0 && i > 0 {
                w |= other.words[i - 1] >> (64 - bit_shift);
            }
            self.words[i + word_shift] |= w;
        }
        // Mask out bits beyond len.
        let valid_in_last = self.len % 64 + 1;
        if valid_in_last < 64 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << valid_in_last) - 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RefutationWitness {
    /// a and a + value both lie in the set.
    Difference { a: u64, value: u64 },
    /// x, x+y and x+y^k all lie in the set.
    Roth { x: u64, y: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    VerifiedExhaustive,
    VerifiedSampled,
    Refuted { witness: RefutationWitness },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AvoidanceCertificate {
    pub set_digest: String,
    pub n: u64,
    pub variant: String,
    pub parameters: String,
    pub verdict: Verdict,
    pub checked: u64,
    pub elapsed_ms: u64,
}

impl AvoidanceCertificate {
    pub fn is_verified_exhaustive(&self) -> bool {
        self.verdict == Verdict::VerifiedExhaustive
    }
}

/// Content hash of the element list, independent of how it was produced.
pub fn set_digest(elements: &[u64]) -> String {
    let mut h = Sha256::new();
    for &e in elements {
        h.update(e.to_le_bytes());
    }
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Positive values of f over Z that land in [1, N]. The scan bound comes
/// from leading-term domination: beyond it |f| provably exceeds N.
pub fn enumerate_poly_values(f: &UnivariatePolynomial, n: u64) -> Result<Vec<u64>> {
    if n < 1 {
        return Err(Error::Precondition("N must be at least 1".into()));
    }
    let d = f.degree();
    if d == 0 {
        let c = f.coeff(0);
        return Ok(if c >= 1 && (c as u64) <= n { vec![c as u64] } else { vec![] });
    }
    let lead = f.leading_coeff().unsigned_abs();
    let lower: u64 = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e != d)
        .map(|&(_, c)| c.unsigned_abs())
        .sum();
    // For |x| >= b0, |f(x)| >= lead*|x|^d / 2; grow b until lead*b^d/2 > N.
    let b0 = std::cmp::max(1, (2 * lower).div_ceil(lead));
    let mut b = b0;
    while (lead as u128) * (b as u128).pow(d) / 2 <= n as u128 {
        b += 1;
    }
    let mut out = Vec::new();
    for x in -(b as i64)..=(b as i64) {
        let v = f.eval_exact(x)?;
        if v >= 1 && v <= n as i128 {
            out.push(v as u64);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn membership(elements: &[u64]) -> (Bitmap, u64) {
    let max = elements.last().copied().unwrap_or(0);
    let mut bm = Bitmap::new(max);
    for &e in elements {
        bm.mark(e);
    }
    (bm, max)
}

/// Exhaustive check that no two elements differ by a forbidden value.
pub fn verify_difference_avoidance(elements: &[u64], values: &[u64]) -> AvoidanceCertificate {
    let start = Instant::now();
    let (bm, max) = membership(elements);
    let checked = elements.len() as u64 * values.len() as u64;
    let violated = elements
        .par_iter()
        .find_map_any(|&a| {
            values
                .iter()
                .find(|&&v| bm.contains(a + v))
                .map(|&v| (a, v))
        })
        .is_some();
    // Deterministic witness: re-scan in order when the parallel pass hit one.
    let verdict = if violated {
        let (a, v) = elements
            .iter()
            .find_map(|&a| {
                values
                    .iter()
                    .find(|&&v| bm.contains(a + v))
                    .map(|&v| (a, v))
            })
            .expect("violation seen in parallel pass");
        Verdict::Refuted { witness: RefutationWitness::Difference { a, value: v } }
    } else {
        Verdict::VerifiedExhaustive
    };
    AvoidanceCertificate {
        set_digest: set_digest(elements),
        n: max,
        variant: "difference-avoidance".into(),
        parameters: format!("values={}", values.len()),
        verdict,
        checked,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Exhaustive pairwise check against a sieve bitmap of forbidden values;
/// suited to dense value sets where listing them would dominate.
pub fn verify_against_bitmap(
    elements: &[u64],
    marked: &Bitmap,
    parameters: &str,
) -> AvoidanceCertificate {
    let start = Instant::now();
    let scan = |i: usize| {
        let a = elements[i];
        elements[i + 1..]
            .iter()
            .find(|&&b| marked.contains(b - a))
            .map(|&b| (a, b - a))
    };
    let violated = (0..elements.len()).into_par_iter().find_map_any(scan).is_some();
    // Deterministic witness: re-scan in order when the parallel pass hit one.
    let verdict = if violated {
        let (a, value) = (0..elements.len())
            .find_map(scan)
            .expect("violation seen in parallel pass");
        Verdict::Refuted { witness: RefutationWitness::Difference { a, value } }
    } else {
        Verdict::VerifiedExhaustive
    };
    AvoidanceCertificate {
        set_digest: set_digest(elements),
        n: elements.last().copied().unwrap_or(0),
        variant: "difference-avoidance".into(),
        parameters: parameters.to_string(),
        verdict,
        checked: (elements.len() * elements.len().saturating_sub(1) / 2) as u64,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Exhaustive check for configurations {x, x+y, x+y^k}, y nonzero of either
/// sign.
pub fn verify_nonlinear_roth(elements: &[u64], k: u32, n: u64) -> Result<AvoidanceCertificate> {
    if k < 2 {
        return Err(Error::Precondition("k must be at least 2".into()));
    }
    if elements.last().is_some_and(|&x| x > n) {
        return Err(Error::Precondition("set has elements above N".into()));
    }
    let start = Instant::now();
    let (bm, _) = membership(elements);
    let find = |deterministic: bool| -> Option<(u64, i64)> {
        let scan = |&x: &u64| -> Option<(u64, i64)> {
            // Walk |y| upward; once y^k > n + x both x + y^k > n and
            // x - y^k < 1, so no further y of either sign can land in range.
            let mut y: i64 = 1;
            while (y as i128).pow(k) <= n as i128 + x as i128 {
                for sy in [y, -y] {
                    let xy = x as i128 + sy as i128;
                    let xyk = x as i128 + (sy as i128).pow(k);
                    if (1..=n as i128).contains(&xy)
                        && (1..=n as i128).contains(&xyk)
                        && bm.contains(xy as u64)
                        && bm.contains(xyk as u64)
                    {
                        return Some((x, sy));
                    }
                }
                y += 1;
            }
            None
        };
        if deterministic {
            elements.iter().find_map(&scan)
        } else {
            elements.par_iter().find_map_any(scan)
        }
    };
    let verdict = if find(false).is_some() {
        let (x, y) = find(true).expect("violation seen in parallel pass");
        Verdict::Refuted { witness: RefutationWitness::Roth { x, y } }
    } else {
        Verdict::VerifiedExhaustive
    };
    Ok(AvoidanceCertificate {
        set_digest: set_digest(elements),
        n,
        variant: "nonlinear-roth".into(),
        parameters: format!("k={k}"),
        verdict,
        checked: elements.len() as u64,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Replay a refutation witness against the element list.
pub fn replay_witness(elements: &[u64], witness: &RefutationWitness, k: u32) -> bool {
    let (bm, _) = membership(elements);
    match witness {
        RefutationWitness::Difference { a, value } => {
            bm.contains(*a) && bm.contains(a + value)
        }
        RefutationWitness::Roth { x, y } => {
            let xy = *x as i128 + *y as i128;
            let xyk = *x as i128 + (*y as i128).pow(k);
            *y != 0
                && bm.contains(*x)
                && xy >= 1
                && xyk >= 1
                && bm.contains(xy as u64)
                && bm.contains(xyk as u64)
        }
    }
}

/// Sampled smoke check for sets beyond the materialization cap. The verdict
/// never satisfies acceptance criteria.
pub fn verify_difference_avoidance_sampled(
    set: &ConstructedSet,
    values: &[u64],
    rng: &mut impl Rng,
) -> Result<AvoidanceCertificate> {
    let start = Instant::now();
    if values.is_empty() {
        return Err(Error::Precondition("no values to sample against".into()));
    }
    let mut checked = 0u64;
    for _ in 0..SAMPLE_PAIRS {
        let a = set.sample_element(rng);
        let v = values[rng.gen_range(0..values.len())];
        checked += 1;
        if set.contains(a + v) {
            return Ok(AvoidanceCertificate {
                set_digest: String::new(),
                n: set.n(),
                variant: "difference-avoidance".into(),
                parameters: format!("sampled values={}", values.len()),
                verdict: Verdict::Refuted {
                    witness: RefutationWitness::Difference { a, value: v },
                },
                checked,
                elapsed_ms: start.elapsed().as_millis() as u64,
            });
        }
    }
    Ok(AvoidanceCertificate {
        set_digest: String::new(),
        n: set.n(),
        variant: "difference-avoidance".into(),
        parameters: format!("sampled values={}", values.len()),
        verdict: Verdict::VerifiedSampled,
        checked,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Bitmap of x^2 + y^2 <= N over x, y >= 0, not both zero.
pub fn sums_of_two_squares_sieve(n: u64) -> Result<Bitmap> {
    if n > SIEVE_LIMIT {
        return Err(Error::TooLarge { limit: SIEVE_LIMIT });
    }
    let mut bm = Bitmap::new(n);
    let mut x = 0u64;
    while x * x <= n {
        let mut y = x;
        while x * x + y * y <= n {
            if x != 0 || y != 0 {
                bm.mark(x * x + y * y);
            }
            y += 1;
        }
        x += 1;
    }
    Ok(bm)
}

/// Bitmap of x_1^k + ... + x_s^k <= N over x_i >= 0, excluding the all-zero
/// sum. Iterated sumset dynamic program on bit words.
pub fn sums_of_k_powers_sieve(n: u64, k: u32, s: u32) -> Result<Bitmap> {
    if s < 1 {
        return Err(Error::Precondition("count s must be at least 1".into()));
    }
    if n > SIEVE_LIMIT {
        return Err(Error::TooLarge { limit: SIEVE_LIMIT });
    }
    let mut powers = Vec::new();
    let mut x = 0u64;
    loop {
        let p = (x as u128).pow(k);
        if p > n as u128 {
            break;
        }
        powers.push(p as u64);
        x += 1;
    }
    let mut reach = Bitmap::new(n);
    reach.mark(0);
    for _ in 0..s {
        let mut next = Bitmap::new(n);
        for &p in &powers {
            next.or_shifted(&reach, p);
        }
        reach = next;
    }
    // 0 has only the all-zero representation, which is excluded.
    let mut out = reach;
    out.words[0] &= !1;
    Ok(out)
}

/// Exact r_k(m) by ordered subset enumeration with pruning; shares nothing
/// with the branch-and-bound clique solver it cross-checks.
pub fn brute_force_r_k(m: u64, k: u32) -> Result<(usize, ResidueSet)> {
    if m > BRUTE_FORCE_LIMIT {
        return Err(Error::Precondition(format!(
            "m = {m} exceeds the exhaustive oracle limit {BRUTE_FORCE_LIMIT}"
        )));
    }
    let forbidden = power_residues(m, k)?;
    let mut fb = vec![false; m as usize];
    for &v in forbidden.elements() {
        if v != 0 {
            fb[v as usize] = true;
        }
    }
    fn extend(
        m: u64,
        fb: &[bool],
        chosen: &mut Vec<u64>,
        start: u64,
        best: &mut Vec<u64>,
    ) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        for v in start..m {
            if chosen.len() + (m - v) as usize <= best.len() {
                break;
            }
            let ok = chosen
                .iter()
                .all(|&u| !fb[((v - u) % m) as usize] && !fb[((u + m - v) % m) as usize]);
            if ok {
                chosen.push(v);
                extend(m, fb, chosen, v + 1, best);
                chosen.pop();
            }
        }
    }
    let mut best = Vec::new();
    let mut chosen = Vec::new();
    extend(m, &fb, &mut chosen, 0, &mut best);
    let witness = ResidueSet::new(m, best.iter().copied())?;
    Ok((best.len(), witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop51Report {
    pub p: u64,
    pub k: u32,
    /// r_k(p^k)
    pub lhs: u64,
    /// p^(k-1) * r_k(p)
    pub rhs: u64,
    pub equal: bool,
}

/// Both sides of r_k(p^k) = p^(k-1) r_k(p), each by an exact method.
pub fn check_prop_51(p: u64, k: u32) -> Result<Prop51Report> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if k < 2 {
        return Err(Error::Precondition("k must be at least 2".into()));
    }
    if (k as u64).is_multiple_of(p) {
        return Err(Error::Precondition(format!("p = {p} divides k = {k}")));
    }
    let pk = p
        .checked_pow(k)
        .ok_or(Error::RangeExceeded { m: p, y: k })?;
    let lhs = if pk <= BRUTE_FORCE_LIMIT {
        brute_force_r_k(pk, k)?.0 as u64
    } else {
        let res = r_k(pk, k, Budget::unlimited())?;
        if !res.optimal {
            return Err(Error::Precondition(format!(
                "search for r_k({pk}) did not prove optimality"
            )));
        }
        res.size as u64
    };
    let rhs = p.pow(k - 1) * brute_force_r_k(p, k)?.0 as u64;
    Ok(Prop51Report { p, k, lhs, rhs, equal: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, i64)]) -> UnivariatePolynomial {
        UnivariatePolynomial::new(terms.iter().copied()).unwrap()
    }

    #[test]
    fn poly_values_examples() {
        assert_eq!(enumerate_poly_values(&poly(&[(2, 1)]), 20).unwrap(), vec![1, 4, 9, 16]);
        assert_eq!(
            enumerate_poly_values(&poly(&[(2, 1), (3, 5)]), 100).unwrap(),
            vec![6, 44]
        );
        assert_eq!(enumerate_poly_values(&poly(&[(3, 1)]), 30).unwrap(), vec![1, 8, 27]);
    }

    #[test]
    fn poly_values_include_negative_arguments() {
        // f(x) = x^2 - x: f(-3) = 12
        let vals = enumerate_poly_values(&poly(&[(2, 1), (1, -1)]), 20).unwrap();
        assert_eq!(vals, vec![2, 6, 12, 20]);
    }

    #[test]
    fn difference_avoidance_verdicts() {
        let cert = verify_difference_avoidance(&[1, 3, 6, 8], &[1, 4, 9]);
        assert_eq!(cert.verdict, Verdict::VerifiedExhaustive);

        let cert = verify_difference_avoidance(&[1, 2], &[1]);
        assert_eq!(
            cert.verdict,
            Verdict::Refuted { witness: RefutationWitness::Difference { a: 1, value: 1 } }
        );
    }

    #[test]
    fn refutation_witness_replays() {
        let elements = [1u64, 2];
        let cert = verify_difference_avoidance(&elements, &[1]);
        if let Verdict::Refuted { witness } = &cert.verdict {
            assert!(replay_witness(&elements, witness, 2));
        } else {
            panic!("expected refutation");
        }
    }

    #[test]
    fn nonlinear_roth_verdicts() {
        let cert = verify_nonlinear_roth(&[1], 2, 10).unwrap();
        assert_eq!(cert.verdict, Verdict::VerifiedExhaustive);

        // {1,2,5}: x=1, y=1 gives {1, 2, 2}; degenerate but non-trivial.
        let cert = verify_nonlinear_roth(&[1, 2, 5], 2, 10).unwrap();
        assert_eq!(
            cert.verdict,
            Verdict::Refuted { witness: RefutationWitness::Roth { x: 1, y: 1 } }
        );
        assert!(replay_witness(&[1, 2, 5], &RefutationWitness::Roth { x: 1, y: 1 }, 2));
    }

    #[test]
    fn nonlinear_roth_catches_negative_y() {
        // x=10, y=-2: x+y = 8, x+y^2 = 14.
        let cert = verify_nonlinear_roth(&[8, 10, 14], 2, 20).unwrap();
        assert!(matches!(cert.verdict, Verdict::Refuted { .. }));
    }

    #[test]
    fn two_squares_sieve_examples() {
        let bm = sums_of_two_squares_sieve(10).unwrap();
        let marked: Vec<u64> = bm.iter_set().collect();
        assert_eq!(marked, vec![1, 2, 4, 5, 8, 9, 10]);

        let bm = sums_of_two_squares_sieve(3).unwrap();
        assert_eq!(bm.iter_set().collect::<Vec<_>>(), vec![1, 2]);

        let bm = sums_of_two_squares_sieve(25).unwrap();
        assert!(bm.contains(18));
        assert!(!bm.contains(21));
    }

    #[test]
    fn k_powers_sieve_examples() {
        let bm = sums_of_k_powers_sieve(50, 4, 7).unwrap();
        assert!(bm.contains(7));
        assert!(bm.contains(16));
        assert!(!bm.contains(8));

        let bm = sums_of_k_powers_sieve(30, 3, 1).unwrap();
        assert_eq!(bm.iter_set().collect::<Vec<_>>(), vec![1, 8, 27]);

        let bm = sums_of_k_powers_sieve(5, 2, 2).unwrap();
        assert_eq!(bm.iter_set().collect::<Vec<_>>(), vec![1, 2, 4, 5]);
    }

    #[test]
    fn sieves_agree_for_two_squares() {
        let n = 100_000;
        let a = sums_of_two_squares_sieve(n).unwrap();
        let b = sums_of_k_powers_sieve(n, 2, 2).unwrap();
        for v in 0..=n {
            assert_eq!(a.contains(v), b.contains(v), "v = {v}");
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_r_k(5, 2).unwrap().0, 2);
        assert_eq!(brute_force_r_k(3, 2).unwrap().0, 1);
        assert_eq!(brute_force_r_k(16, 2).unwrap().0, 6);
        assert!(brute_force_r_k(41, 2).is_err());
    }

    #[test]
    fn prop_51_reports() {
        let r = check_prop_51(3, 2).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equal), (3, 3, true));
        let r = check_prop_51(5, 2).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equal), (10, 10, true));
        let r = check_prop_51(7, 2).unwrap();
        assert!(r.equal, "r_2(49) = {} vs 7 * r_2(7) = {}", r.lhs, r.rhs);
        assert!(check_prop_51(2, 2).is_err());
        assert!(check_prop_51(4, 2).is_err());
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = set_digest(&[1, 2, 3]);
        assert_eq!(a, set_digest(&[1, 2, 3]));
        assert_ne!(a, set_digest(&[1, 2, 4]));
        assert_eq!(a.len(), 64);
    }
}
