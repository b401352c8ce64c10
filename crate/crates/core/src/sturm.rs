//! Exact real-root counting and certified sign analysis.
//!
//! Root counting uses the Sturm chain of the squarefree part, so multiple
//! roots are counted once. The counting convention on a bounded interval is
//! **half-open**: `sturm_root_count(p, [a, b])` counts distinct real roots
//! in `(a, b]`, which makes counts additive under concatenation of
//! intervals; a ray `[a, ∞)` counts roots in `(a, ∞)`. Sign certification,
//! by contrast, always treats its region as *closed* — the claims it proves
//! are about every point of the region, endpoints included.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A region of the real line with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    Point { at: Rational },
    /// `[a, b]` with `a ≤ b`.
    Interval { lo: Rational, hi: Rational },
    /// `[a, ∞)`.
    RayFrom { lo: Rational },
}

impl Region {
    pub fn point(at: Rational) -> Region {
        Region::Point { at }
    }

    pub fn interval(lo: Rational, hi: Rational) -> Result<Region> {
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "interval endpoints out of order: [{lo}, {hi}]"
            )));
        }
        Ok(Region::Interval { lo, hi })
    }

    pub fn ray_from(lo: Rational) -> Region {
        Region::RayFrom { lo }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Point { at } => write!(f, "{{{at}}}"),
            Region::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
            Region::RayFrom { lo } => write!(f, "[{lo}, ∞)"),
        }
    }
}

/// One of the four sign predicates a certificate can assert.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignClaim {
    NonNegative,
    Positive,
    NonPositive,
    Negative,
}

impl SignClaim {
    /// (+1 or −1, whether zeros are allowed).
    fn orientation(self) -> (i8, bool) {
        match self {
            SignClaim::NonNegative => (1, true),
            SignClaim::Positive => (1, false),
            SignClaim::NonPositive => (-1, true),
            SignClaim::Negative => (-1, false),
        }
    }

    fn admits(self, sign: i8) -> bool {
        let (want, weak) = self.orientation();
        sign == want || (weak && sign == 0)
    }
}

impl fmt::Display for SignClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignClaim::NonNegative => ">= 0",
            SignClaim::Positive => "> 0",
            SignClaim::NonPositive => "<= 0",
            SignClaim::Negative => "< 0",
        };
        f.write_str(s)
    }
}

/// Location of one distinct real root: either an exact rational value or an
/// open bracket `(lo, hi)` containing exactly one root, with both endpoints
/// provably off the root set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootLoc {
    Exact { at: Rational },
    Bracket { lo: Rational, hi: Rational },
}

impl RootLoc {
    fn sort_key(&self) -> &Rational {
        match self {
            RootLoc::Exact { at } => at,
            RootLoc::Bracket { lo, .. } => lo,
        }
    }
}

/// Sturm chain of the squarefree part of `p`, with each element rescaled by
/// a positive rational to coprime integer coefficients (positive scaling
/// keeps every sign, which is all the chain is consulted for).
pub fn sturm_chain(p: &Polynomial) -> Result<Vec<Polynomial>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = normalize_positive(p.squarefree_part());
    let mut chain = vec![s.clone()];
    if s.degree() == Some(0) {
        return Ok(chain);
    }
    chain.push(normalize_positive(s.derivative()));
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(normalize_positive(-&r));
    }
    Ok(chain)
}

/// Scale by a positive rational to coprime integer coefficients.
fn normalize_positive(p: Polynomial) -> Polynomial {
    if p.is_zero() {
        return p;
    }
    let prim = p.clone().into_primitive_integer();
    // into_primitive_integer may flip the sign; undo if it did
    let k = p.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    if p.coeff(k).signum() == prim.coeff(k).signum() {
        prim
    } else {
        -&prim
    }
}

fn variations_at(chain: &[Polynomial], x: &Rational) -> usize {
    count_variations(chain.iter().map(|q| q.eval(x).signum()))
}

fn variations_at_pos_inf(chain: &[Polynomial]) -> usize {
    count_variations(chain.iter().map(|q| q.leading().map_or(0, Rational::signum)))
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            v += 1;
        }
        prev = s;
    }
    v
}

/// Exact number of distinct real roots of `p` in the region.
///
/// Bounded intervals are counted half-open as `(lo, hi]`, rays as
/// `(lo, ∞)`; a point region reports whether the point is a root. Rejects
/// the zero polynomial.
pub fn sturm_root_count(p: &Polynomial, region: &Region) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match region {
        Region::Point { at } => Ok(usize::from(p.eval(at).is_zero())),
        Region::Interval { lo, hi } => {
            let chain = sturm_chain(p)?;
            Ok(variations_at(&chain, lo) - variations_at(&chain, hi))
        }
        Region::RayFrom { lo } => {
            let chain = sturm_chain(p)?;
            Ok(variations_at(&chain, lo) - variations_at_pos_inf(&chain))
        }
    }
}

/// Distinct roots in `(lo, hi)`, open, for a chain whose head is squarefree.
fn count_open(chain: &[Polynomial], lo: &Rational, hi: &Rational) -> usize {
    let half_open = variations_at(chain, lo) - variations_at(chain, hi);
    half_open - usize::from(chain[0].eval(hi).is_zero())
}

/// Isolate every distinct root of the (squarefree) chain head strictly
/// inside `(lo, hi)`. Returned locations are sorted and pairwise disjoint.
fn isolate_open(chain: &[Polynomial], lo: &Rational, hi: &Rational) -> Vec<RootLoc> {
    let mut out = Vec::new();
    split(chain, lo, hi, &mut out);
    out.sort_by(|a, b| a.sort_key().cmp(b.sort_key()));
    out
}

fn split(chain: &[Polynomial], lo: &Rational, hi: &Rational, out: &mut Vec<RootLoc>) {
    let s = &chain[0];
    let n = count_open(chain, lo, hi);
    if n == 0 {
        return;
    }
    if n == 1 && !s.eval(lo).is_zero() && !s.eval(hi).is_zero() {
        out.push(RootLoc::Bracket {
            lo: lo.clone(),
            hi: hi.clone(),
        });
        return;
    }
    let mid = (lo + hi) * Rational::ratio(1, 2);
    if s.eval(&mid).is_zero() {
        out.push(RootLoc::Exact { at: mid.clone() });
    }
    split(chain, lo, &mid, out);
    split(chain, &mid, hi, out);
}

/// All distinct roots in the closed interval `[lo, hi]`, sorted.
pub fn roots_in_closed(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Vec<RootLoc>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(p)?;
    let s = &chain[0];
    let mut out = Vec::new();
    if s.eval(lo).is_zero() {
        out.push(RootLoc::Exact { at: lo.clone() });
    }
    if lo < hi {
        out.extend(isolate_open(&chain, lo, hi));
        if s.eval(hi).is_zero() {
            out.push(RootLoc::Exact { at: hi.clone() });
        }
    }
    Ok(out)
}

/// A re-checkable record that a polynomial satisfies a sign claim on the
/// whole (closed) region. The evidence is the region's complete root
/// inventory plus exact evaluations at non-root points covering every
/// root-free segment: no sign change can hide between them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignCertificate {
    pub region: Region,
    pub claim: SignClaim,
    /// Distinct roots of the polynomial inside the closed region.
    pub root_count: usize,
    pub root_locs: Vec<RootLoc>,
    /// For a ray region: a rational beyond every real root of the
    /// polynomial, at which the eventual sign was sampled.
    pub ray_sample_end: Option<Rational>,
    /// `(point, exact value)` pairs; every listed point is off the root set.
    pub evaluations: Vec<(Rational, Rational)>,
}

impl SignCertificate {
    /// Replay the certificate against a polynomial: recomputes the analysis
    /// from scratch and compares. Fails if the certificate does not belong
    /// to `p` or was tampered with.
    pub fn recheck(&self, p: &Polynomial) -> Result<()> {
        let fresh = certify_sign_on_region(p, self.region.clone(), self.claim)?;
        if fresh.root_count != self.root_count
            || fresh.root_locs != self.root_locs
            || fresh.ray_sample_end != self.ray_sample_end
            || fresh.evaluations != self.evaluations
        {
            return Err(Error::UnverifiedCertificate(
                "sign certificate does not replay against this polynomial".into(),
            ));
        }
        Ok(())
    }
}

/// Certify `p {claim} 0` for every point of the closed region.
///
/// Succeeds iff the claim is true on all of it, by exact root counting plus
/// sample evaluations; returns [`Error::ClaimFalse`] (with a rational
/// witness when one exists) otherwise.
pub fn certify_sign_on_region(
    p: &Polynomial,
    region: Region,
    claim: SignClaim,
) -> Result<SignCertificate> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (want, weak) = claim.orientation();

    // Point region: a single exact evaluation decides.
    let (lo, hi, ray) = match &region {
        Region::Point { at } => (at.clone(), at.clone(), false),
        Region::Interval { lo, hi } => (lo.clone(), hi.clone(), false),
        Region::RayFrom { lo } => {
            let end = p.root_bound().max(lo.clone()) + Rational::one();
            (lo.clone(), end, true)
        }
    };
    if lo == hi && !ray {
        let v = p.eval(&lo);
        if !claim.admits(v.signum()) {
            return Err(Error::ClaimFalse { witness: Some(lo) });
        }
        let is_root = v.is_zero();
        return Ok(SignCertificate {
            region,
            claim,
            root_count: usize::from(is_root),
            root_locs: if is_root {
                vec![RootLoc::Exact { at: lo.clone() }]
            } else {
                vec![]
            },
            ray_sample_end: None,
            evaluations: if is_root { vec![] } else { vec![(lo, v)] },
        });
    }

    let locs = roots_in_closed(p, &lo, &hi)?;

    if !weak && !locs.is_empty() {
        // Any root defeats a strict claim; surface a rational witness when
        // the polynomial actually crosses.
        let witness = strict_witness(p, want, &locs, &lo, &hi);
        return Err(Error::ClaimFalse { witness });
    }

    // One sample per root-free segment of [lo, hi]; between roots the sign
    // is constant, so these evaluations pin the sign everywhere off the
    // root set.
    let mut points: Vec<Rational> = Vec::new();
    if !p.eval(&lo).is_zero() {
        points.push(lo.clone());
    }
    for (i, loc) in locs.iter().enumerate() {
        let next_low = match locs.get(i + 1) {
            Some(RootLoc::Exact { at }) => at.clone(),
            Some(RootLoc::Bracket { lo, .. }) => lo.clone(),
            None => hi.clone(),
        };
        match loc {
            RootLoc::Bracket { hi: h, .. } => {
                debug_assert!(*h <= next_low || locs.get(i + 1).is_none());
                points.push(h.clone());
            }
            RootLoc::Exact { at } => {
                if *at < next_low {
                    points.push((at + &next_low) * Rational::ratio(1, 2));
                } else if *at < hi {
                    points.push((at + &hi) * Rational::ratio(1, 2));
                }
            }
        }
    }
    if !p.eval(&hi).is_zero() {
        points.push(hi.clone());
    }
    points.dedup();

    let mut evaluations = Vec::with_capacity(points.len());
    for t in points {
        let v = p.eval(&t);
        debug_assert!(!v.is_zero(), "sample point landed on a root");
        if v.signum() != want {
            return Err(Error::ClaimFalse { witness: Some(t) });
        }
        evaluations.push((t, v));
    }

    Ok(SignCertificate {
        region,
        claim,
        root_count: locs.len(),
        root_locs: locs,
        ray_sample_end: ray.then_some(hi),
        evaluations,
    })
}

/// For a falsified strict claim, try to find a rational point evaluating
/// against it (an even-order touch of zero at an irrational point has none,
/// but an exact root or a sign crossing does).
fn strict_witness(
    p: &Polynomial,
    want: i8,
    locs: &[RootLoc],
    lo: &Rational,
    hi: &Rational,
) -> Option<Rational> {
    for loc in locs {
        if let RootLoc::Exact { at } = loc {
            return Some(at.clone());
        }
    }
    for cand in [lo, hi]
        .into_iter()
        .chain(locs.iter().flat_map(|l| match l {
            RootLoc::Bracket { lo, hi } => vec![lo, hi],
            RootLoc::Exact { at } => vec![at],
        }))
    {
        let s = p.eval(cand).signum();
        if s != 0 && s != want {
            return Some(cand.clone());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn pf() -> Polynomial {
        Polynomial::from_ints(&[20812, 756, 1107, -216])
    }

    fn pfhat() -> Polynomial {
        Polynomial::from_ints(&[20812, 5940, -2781, 216])
    }

    #[test]
    fn counts_simple_root() {
        // u² − 2 has one root in (0, 2]
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let reg = Region::interval(r(0, 1), r(2, 1)).unwrap();
        assert_eq!(sturm_root_count(&p, &reg).unwrap(), 1);
    }

    #[test]
    fn double_root_counted_once() {
        // transform profile of f: double root at 22/3 is its only root in [0, ∞)
        assert_eq!(
            sturm_root_count(&pfhat(), &Region::ray_from(r(0, 1))).unwrap(),
            1
        );
    }

    #[test]
    fn no_roots_beyond_negativity_radius() {
        // 7.3830946 > largest root of the f profile; 4641549/628735 ≈ 7.38238
        // is also beyond it (lower rational stand-in for 2π·1.084²)
        let u0 = r(73830, 10000);
        assert_eq!(sturm_root_count(&pf(), &Region::ray_from(u0)).unwrap(), 0);
    }

    #[test]
    fn half_open_convention_at_endpoints() {
        let p = Polynomial::from_ints(&[0, 1]); // root at 0
        let inc = Region::interval(r(-1, 1), r(0, 1)).unwrap();
        let exc = Region::interval(r(0, 1), r(1, 1)).unwrap();
        assert_eq!(sturm_root_count(&p, &inc).unwrap(), 1);
        assert_eq!(sturm_root_count(&p, &exc).unwrap(), 0);
    }

    #[test]
    fn additive_over_concatenation() {
        // roots at 1, 2, 3, with a double root at 2
        let p = Polynomial::from_ints(&[-1, 1]);
        let q = Polynomial::from_ints(&[-2, 1]);
        let s = Polynomial::from_ints(&[-3, 1]);
        let poly = &(&(&p * &q) * &q) * &s;
        let total = Region::interval(r(0, 1), r(4, 1)).unwrap();
        assert_eq!(sturm_root_count(&poly, &total).unwrap(), 3);
        for cut in [r(1, 1), r(2, 1), r(5, 2), r(7, 2)] {
            let left = Region::interval(r(0, 1), cut.clone()).unwrap();
            let right = Region::interval(cut, r(4, 1)).unwrap();
            assert_eq!(
                sturm_root_count(&poly, &left).unwrap() + sturm_root_count(&poly, &right).unwrap(),
                3
            );
        }
    }

    #[test]
    fn rejects_zero_polynomial() {
        let z = Polynomial::zero();
        assert!(matches!(
            sturm_root_count(&z, &Region::ray_from(r(0, 1))),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn certifies_nonnegative_transform_profile() {
        let cert =
            certify_sign_on_region(&pfhat(), Region::ray_from(r(0, 1)), SignClaim::NonNegative)
                .unwrap();
        assert_eq!(cert.root_count, 1);
        cert.recheck(&pfhat()).unwrap();
        // tampering is detected
        let mut bad = cert.clone();
        bad.root_count = 0;
        assert!(bad.recheck(&pfhat()).is_err());
    }

    #[test]
    fn certifies_perfect_square() {
        // (−22 + 3u)² ≥ 0 everywhere
        let b = Polynomial::from_ints(&[-22, 3]);
        let sq = &b * &b;
        certify_sign_on_region(&sq, Region::ray_from(r(0, 1)), SignClaim::NonNegative).unwrap();
        // but not strictly positive: it vanishes at 22/3
        let err =
            certify_sign_on_region(&sq, Region::ray_from(r(0, 1)), SignClaim::Positive)
                .unwrap_err();
        assert!(matches!(err, Error::ClaimFalse { .. }));
    }

    #[test]
    fn certifies_negative_tail_of_f_profile() {
        let u0 = r(73831, 10000);
        certify_sign_on_region(&pf(), Region::ray_from(u0), SignClaim::Negative).unwrap();
    }

    #[test]
    fn false_claim_yields_witness() {
        // u² − 2 is not nonnegative on [0, 2]
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let reg = Region::interval(r(0, 1), r(2, 1)).unwrap();
        match certify_sign_on_region(&p, reg, SignClaim::NonNegative) {
            Err(Error::ClaimFalse { witness: Some(w) }) => {
                assert!(p.eval(&w).is_negative());
            }
            other => panic!("expected a witnessed failure, got {other:?}"),
        }
    }

    #[test]
    fn exact_rational_roots_are_located() {
        // roots at 1/2 (exact, hit by bisection) and √2
        let p = &Polynomial::from_ints(&[-1, 2]) * &Polynomial::from_ints(&[-2, 0, 1]);
        let locs = roots_in_closed(&p, &r(0, 1), &r(2, 1)).unwrap();
        assert_eq!(locs.len(), 2);
        assert!(matches!(&locs[0], RootLoc::Exact { at } if *at == r(1, 2)));
        assert!(matches!(&locs[1], RootLoc::Bracket { .. }));
    }

    #[test]
    fn endpoint_roots_in_closed_inventory() {
        let p = Polynomial::from_ints(&[0, 1]);
        let locs = roots_in_closed(&p, &r(0, 1), &r(1, 1)).unwrap();
        assert_eq!(locs, vec![RootLoc::Exact { at: r(0, 1) }]);
        // ≥ 0 on [0, 1] holds even though 0 is a root
        certify_sign_on_region(
            &p,
            Region::interval(r(0, 1), r(1, 1)).unwrap(),
            SignClaim::NonNegative,
        )
        .unwrap();
        // > 0 on [0, 1] fails with witness 0
        match certify_sign_on_region(
            &p,
            Region::interval(r(0, 1), r(1, 1)).unwrap(),
            SignClaim::Positive,
        ) {
            Err(Error::ClaimFalse { witness: Some(w) }) => assert_eq!(w, r(0, 1)),
            other => panic!("expected witnessed failure, got {other:?}"),
        }
    }

    #[test]
    fn point_region_claims() {
        let p = pf();
        certify_sign_on_region(&p, Region::point(r(0, 1)), SignClaim::Positive).unwrap();
        assert!(certify_sign_on_region(&p, Region::point(r(8, 1)), SignClaim::Positive).is_err());
    }
}
