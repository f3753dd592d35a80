//! Digit-based builders producing explicit subsets of {1,...,N} whose
//! differences avoid the target configuration, with exact size counting.

use crate::error::{Error, Result};
use crate::residue::{
    gcd, power_residues, root_condition_form, root_condition_univariate, HomogeneousForm,
    ResidueSet, UnivariatePolynomial,
};
use crate::search::ChainSpec;

/// Hard cap on materialized output; larger sets keep exact counts and a
/// streaming enumerator only.
pub const MATERIALIZE_CAP: u64 = 10_000_000;

/// Largest representable element.
const ELEMENT_MAX: u64 = i64::MAX as u64;

/// Chain index selecting the digit's residue set: 1 for i = 0, 0 when k
/// does not divide i, otherwise the exact k-adic valuation of i.
pub fn digit_class(i: u32, k: u32) -> u32 {
    assert!(k >= 2);
    if i == 0 {
        return 1;
    }
    if !i.is_multiple_of(k) {
        return 0;
    }
    let mut i = i;
    let mut v = 0;
    while i.is_multiple_of(k) {
        i /= k;
        v += 1;
    }
    v
}

#[derive(Clone, Debug)]
pub enum ConstructionSpec {
    NonlinearRoth { chain: ChainSpec, y: u32 },
    InhomPoly { m: u64, f: UnivariatePolynomial, r: ResidueSet, y: u32 },
    Multivariate { m: u64, k: u32, form: HomogeneousForm, rp: ResidueSet, y: u32 },
    Greedy { n: u64, forbidden: Vec<u64> },
}

impl ConstructionSpec {
    /// Canonical rendering carried in set-file headers and certificates.
    pub fn render(&self) -> String {
        match self {
            ConstructionSpec::NonlinearRoth { chain, y } => {
                let pre: Vec<String> =
                    chain.preperiod().iter().map(|s| s.render()).collect();
                let per: Vec<String> = chain.period().iter().map(|s| s.render()).collect();
                format!(
                    "variant=nonlinear-roth m={} f={} pre=[{}] period=[{}] Y={y}",
                    chain.modulus(),
                    chain.f().render(),
                    pre.join(";"),
                    per.join(";"),
                )
            }
            ConstructionSpec::InhomPoly { m, f, r, y } => {
                format!("variant=inhom m={m} f={} R={} Y={y}", f.render(), r.render())
            }
            ConstructionSpec::Multivariate { m, k, form, rp, y } => {
                format!(
                    "variant=multivariate m={m} k={k} F={} Rp={} Y={y}",
                    form.render(),
                    rp.render()
                )
            }
            ConstructionSpec::Greedy { n, forbidden } => {
                let vals: Vec<String> = forbidden.iter().map(|v| v.to_string()).collect();
                format!("variant=greedy N={n} forbidden={{{}}}", vals.join(","))
            }
        }
    }
}

/// A constructed subset of [1, N]. Sets beyond [`MATERIALIZE_CAP`] carry the
/// exact size and a digit-wise enumerator instead of an element list.
#[derive(Clone, Debug)]
pub struct ConstructedSet {
    spec: ConstructionSpec,
    n: u64,
    exact_size: u64,
    size_bound: u64,
    elements: Option<Vec<u64>>,
    /// base and per-position digit sets, least significant first; present
    /// for the digit-expansion variants so unmaterialized sets can stream.
    digits: Option<(u64, Vec<Vec<u64>>)>,
}

impl ConstructedSet {
    pub fn spec(&self) -> &ConstructionSpec {
        &self.spec
    }

    /// N: constructed elements lie in [1, N].
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn exact_size(&self) -> u64 {
        self.exact_size
    }

    /// The proof's counting lower bound; never exceeds `exact_size`.
    pub fn size_bound(&self) -> u64 {
        self.size_bound
    }

    pub fn elements(&self) -> Option<&[u64]> {
        self.elements.as_deref()
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.is_some()
    }

    /// Membership test without enumeration: binary search when materialized,
    /// digit decomposition otherwise.
    pub fn contains(&self, v: u64) -> bool {
        if let Some(e) = &self.elements {
            return e.binary_search(&v).is_ok();
        }
        let (base, sets) = self.digits.as_ref().expect("unmaterialized sets are digit-based");
        if v < 1 || v > self.n {
            return false;
        }
        let mut rest = v - 1;
        for s in sets {
            if !s.contains(&(rest % base)) {
                return false;
            }
            rest /= base;
        }
        rest == 0
    }

    /// Uniform random element, drawn digit-wise when unmaterialized.
    pub fn sample_element(&self, rng: &mut impl rand::Rng) -> u64 {
        if let Some(e) = &self.elements {
            return e[rng.gen_range(0..e.len())];
        }
        let (base, sets) = self.digits.as_ref().expect("unmaterialized sets are digit-based");
        let mut v = 0u64;
        for (i, s) in sets.iter().enumerate() {
            v += s[rng.gen_range(0..s.len())] * base.pow(i as u32);
        }
        v + 1
    }

    /// Visit every element in ascending order, materialized or not.
    pub fn stream(&self, mut visit: impl FnMut(u64)) {
        if let Some(e) = &self.elements {
            for &v in e {
                visit(v);
            }
            return;
        }
        let (base, sets) = self.digits.as_ref().expect("unmaterialized sets are digit-based");
        stream_digits(*base, sets, 0, &mut visit);
    }
}

fn stream_digits(base: u64, sets: &[Vec<u64>], acc: u64, visit: &mut impl FnMut(u64)) {
    // Most significant digit first keeps the output ascending.
    let i = sets.len() - 1;
    let place = base.pow(i as u32);
    for &d in &sets[i] {
        let v = acc + d * place;
        if i == 0 {
            visit(v + 1);
        } else {
            stream_digits(base, &sets[..i], v, visit);
        }
    }
}

/// Materialize the digit product {1 + sum u_i base^i} when it fits the cap.
fn build_digit_set(
    spec: ConstructionSpec,
    base: u64,
    sets: Vec<Vec<u64>>,
    size_bound: u64,
) -> Result<ConstructedSet> {
    let y = sets.len() as u32;
    let n = base
        .checked_pow(y)
        .filter(|&n| n <= ELEMENT_MAX)
        .ok_or(Error::RangeExceeded { m: base, y })?;
    let mut exact_size: u64 = 1;
    for s in &sets {
        exact_size = exact_size.saturating_mul(s.len() as u64);
    }
    let elements = if exact_size <= MATERIALIZE_CAP {
        let mut acc: Vec<u64> = vec![0];
        for i in (0..sets.len()).rev() {
            let place = base.pow(i as u32);
            let mut next = Vec::with_capacity(acc.len() * sets[i].len());
            for &v in &acc {
                for &d in &sets[i] {
                    next.push(v + d * place);
                }
            }
            acc = next;
        }
        for v in &mut acc {
            *v += 1;
        }
        debug_assert!(acc.windows(2).all(|w| w[0] < w[1]));
        Some(acc)
    } else {
        None
    };
    assert!(exact_size >= size_bound, "counting bound exceeds actual size");
    Ok(ConstructedSet {
        spec,
        n,
        exact_size,
        size_bound,
        elements,
        digits: Some((base, sets)),
    })
}

/// The chain construction for {x, x+y, x+y^k}: digit i is drawn from
/// R_{digit_class(i, k)}.
pub fn build_nonlinear_roth(chain: &ChainSpec, y: u32) -> Result<ConstructedSet> {
    if !chain.is_validated() {
        return Err(Error::UnvalidatedChain);
    }
    let f = chain.f();
    if f.terms().len() != 1 || f.leading_coeff() != 1 || f.degree() < 2 {
        return Err(Error::Hypothesis(format!(
            "nonlinear-roth construction requires f = x^k with k >= 2, got {}",
            f.render()
        )));
    }
    if y < 1 {
        return Err(Error::Precondition("Y must be at least 1".into()));
    }
    let k = f.degree();
    let m = chain.modulus();
    let sets: Vec<Vec<u64>> = (0..y)
        .map(|i| chain.set_at(digit_class(i, k) as usize).elements().to_vec())
        .collect();
    let size_bound = sets.iter().map(|s| s.len() as u64).product();
    build_digit_set(ConstructionSpec::NonlinearRoth { chain: chain.clone(), y }, m, sets, size_bound)
}

/// Smallest argument magnitude from which |f| is dominated by half its
/// leading term.
fn leading_term_threshold(f: &UnivariatePolynomial) -> u64 {
    let lower: u64 = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e != f.degree())
        .map(|&(_, c)| c.unsigned_abs())
        .sum();
    let lead = f.leading_coeff().unsigned_abs();
    std::cmp::max(1, (2 * lower).div_ceil(lead))
}

/// Minimal digit length for which the degree argument of the inhomogeneous
/// construction applies to f mod m (only binding when deg f > low degree).
pub fn inhom_min_y(m: u64, f: &UnivariatePolynomial) -> u32 {
    let k = f.low_degree();
    let d = f.degree();
    if d == k {
        return 1;
    }
    let t0 = leading_term_threshold(f);
    let mut y = 1u32;
    loop {
        // arguments in play are at least m^ceil((Y+1)/d)
        let e = (y + 1).div_ceil(d);
        if m.checked_pow(e).is_none_or(|p| p >= t0) {
            return y;
        }
        y += 1;
    }
}

/// Position i < Y carries a constrained digit iff k | i and i < X, where
/// X = k(Y+1)/d as a real number (X = Y when d = k).
fn inhom_constrained(i: u32, y: u32, k: u32, d: u32) -> bool {
    if !i.is_multiple_of(k) {
        return false;
    }
    if d == k {
        i < y
    } else {
        (i as u64) * (d as u64) < (k as u64) * (y as u64 + 1)
    }
}

/// Ruzsa-style construction for f(x) = sum_{i=k}^{d} a_i x^i: constrained
/// digits are drawn from a_k * R, free digits from all of Z/m.
pub fn build_inhom_poly(
    m: u64,
    f: &UnivariatePolynomial,
    r: &ResidueSet,
    y: u32,
) -> Result<ConstructedSet> {
    if r.modulus() != m {
        return Err(Error::ModulusMismatch { expected: m, found: r.modulus() });
    }
    if !root_condition_univariate(f, m)? {
        return Err(Error::Hypothesis(format!(
            "f = {} has a nonzero root modulo {m}",
            f.render()
        )));
    }
    let k = f.low_degree();
    let d = f.degree();
    if k < 2 {
        return Err(Error::Hypothesis(format!(
            "lowest-degree term of f must have exponent >= 2, got {k}"
        )));
    }
    let a_k = f.coeff(k);
    let a_k_mod = a_k.rem_euclid(m as i64) as u64;
    if gcd(a_k_mod, m) != 1 {
        return Err(Error::Hypothesis(format!(
            "gcd(a_k, m) must be 1: a_{k} = {a_k}, m = {m}"
        )));
    }
    let powers = power_residues(m, k)?;
    for dif in r.nonzero_differences() {
        if powers.contains(dif) {
            return Err(Error::Hypothesis(format!(
                "R has difference {dif} equal to a {k}th power modulo {m}"
            )));
        }
    }
    let min_y = inhom_min_y(m, f);
    if y < min_y {
        return Err(Error::DigitLengthTooSmall { y, min: min_y });
    }
    let constrained: Vec<u64> = r.dilate(a_k_mod).elements().to_vec();
    let free: Vec<u64> = (0..m).collect();
    let sets: Vec<Vec<u64>> = (0..y)
        .map(|i| {
            if inhom_constrained(i, y, k, d) {
                constrained.clone()
            } else {
                free.clone()
            }
        })
        .collect();
    let size_bound = sets.iter().map(|s| s.len() as u64).product();
    build_digit_set(
        ConstructionSpec::InhomPoly { m, f: f.clone(), r: r.clone(), y },
        m,
        sets,
        size_bound,
    )
}

/// Base-m^k construction for a homogeneous form F of degree k: every digit
/// is drawn from R'.
pub fn build_multivariate(
    m: u64,
    k: u32,
    form: &HomogeneousForm,
    rp: &ResidueSet,
    y: u32,
) -> Result<ConstructedSet> {
    let big_m = m
        .checked_pow(k)
        .ok_or(Error::RangeExceeded { m, y: k })?;
    if rp.modulus() != big_m {
        return Err(Error::ModulusMismatch { expected: big_m, found: rp.modulus() });
    }
    if !root_condition_form(form, m, k)? {
        return Err(Error::Hypothesis(format!(
            "F = {} has a root modulo {m}^{k} with a coordinate nonzero modulo {m}",
            form.render()
        )));
    }
    let image = crate::residue::form_image_mod(form, big_m)?;
    for dif in rp.nonzero_differences() {
        if image.contains(dif) {
            return Err(Error::Hypothesis(format!(
                "R' has difference {dif} in the image of F modulo {big_m}"
            )));
        }
    }
    let sets: Vec<Vec<u64>> = (0..y).map(|_| rp.elements().to_vec()).collect();
    let size_bound = (rp.len() as u64)
        .checked_pow(y)
        .ok_or(Error::RangeExceeded { m: rp.len() as u64, y })?;
    build_digit_set(
        ConstructionSpec::Multivariate { m, k, form: form.clone(), rp: rp.clone(), y },
        big_m,
        sets,
        size_bound,
    )
}

/// Scan 1..N keeping x whenever x - a avoids `forbidden` for every kept a.
pub fn build_greedy(n: u64, forbidden: &[u64]) -> Result<ConstructedSet> {
    if n > MATERIALIZE_CAP {
        return Err(Error::TooLarge { limit: MATERIALIZE_CAP });
    }
    let mut sorted = forbidden.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.first().is_some_and(|&v| v == 0) {
        return Err(Error::Precondition("forbidden values must be positive".into()));
    }
    if sorted.last().is_some_and(|&v| v > n) {
        return Err(Error::Precondition(format!(
            "forbidden value exceeds N = {n}"
        )));
    }
    let mut kept = vec![false; n as usize + 1];
    let mut out = Vec::new();
    for x in 1..=n {
        let ok = sorted
            .iter()
            .take_while(|&&v| v < x)
            .all(|&v| !kept[(x - v) as usize]);
        if ok {
            kept[x as usize] = true;
            out.push(x);
        }
    }
    let size_bound = n.div_ceil(sorted.len() as u64 + 1);
    let exact_size = out.len() as u64;
    assert!(exact_size >= size_bound);
    Ok(ConstructedSet {
        spec: ConstructionSpec::Greedy { n, forbidden: sorted },
        n,
        exact_size,
        size_bound,
        elements: Some(out),
        digits: None,
    })
}

/// The proof's counting formula for each variant; never exceeds the size of
/// the constructed set.
pub fn size_lower_bound(spec: &ConstructionSpec) -> Result<u64> {
    Ok(match spec {
        ConstructionSpec::NonlinearRoth { chain, y } => {
            let k = chain.f().degree();
            (0..*y)
                .map(|i| chain.set_at(digit_class(i, k) as usize).len() as u64)
                .product()
        }
        ConstructionSpec::InhomPoly { m, f, r, y } => {
            let k = f.low_degree();
            let d = f.degree();
            let constrained =
                (0..*y).filter(|&i| inhom_constrained(i, *y, k, d)).count() as u32;
            (r.len() as u64).pow(constrained) * m.pow(y - constrained)
        }
        ConstructionSpec::Multivariate { rp, y, .. } => (rp.len() as u64).pow(*y),
        ConstructionSpec::Greedy { n, forbidden } => {
            n.div_ceil(forbidden.len() as u64 + 1)
        }
    })
}
