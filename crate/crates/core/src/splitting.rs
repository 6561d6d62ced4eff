//! Eliahou–Kervaire splittings of the restricted ideals
//! `I_{K_m \ K_r, s}` and an independent verifier for arbitrary candidate
//! splittings.
//!
//! A certificate stores the splitting function extensionally, one row per
//! minimal generator of `J ∩ K`, so it can be serialized and re-checked
//! without access to the construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::symbolic::{restricted_ideal, RestrictedIdealSpec};

/// Default bound on `|G(J ∩ K)|` for the exhaustive subset check.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// Parameters of a splitting built from the complete-graph construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitParams {
    pub m: usize,
    pub r: usize,
    pub s: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitEntry {
    pub w: Monomial,
    pub phi: Monomial,
    pub phi_hat: Monomial,
}

/// `I = J + K` together with `w ↦ (φ(w), φ̂(w))` on `G(J ∩ K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate {
    pub params: Option<SplitParams>,
    pub ideal: MonomialIdeal,
    pub left: MonomialIdeal,
    pub right: MonomialIdeal,
    pub map: Vec<SplitEntry>,
}

fn excluded(m: usize, s: u32, r: usize) -> bool {
    m as i64 - s as i64 - 1 == r as i64
}

/// The splitting `I_{K_m \ K_r, s} = L1 + L2`, where `L1` holds the
/// generators divisible by `x_r` and `L2` the rest.
///
/// For `r > m - s - 1`, `L1` equals `I_{K_m \ K_r, s} ∩ <x_r>`. For
/// `r < m - s - 1` the ideal is principal, generated by `x_{r+1} ... x_m`,
/// so `L1` is zero and the splitting is trivial.
///
/// Fails with [`Error::ExcludedParameter`] when `r = m - s - 1`.
pub fn theorem_split(m: usize, s: u32, r: usize) -> Result<SplitCertificate> {
    check_domain(m, s, r)?;
    if excluded(m, s, r) {
        return Err(Error::ExcludedParameter { m, s, r });
    }
    build_split(m, s, r, LeftForm::Generators)
}

/// How `L1` is formed from `I = I_{K_m \ K_r, s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LeftForm {
    /// The generators of `I` divisible by `x_r`.
    Generators,
    /// `I ∩ <x_r>`.
    Intersection,
}

fn check_domain(m: usize, s: u32, r: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "splitting needs m >= 3, got {m}"
        )));
    }
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "splitting needs s >= 2, got {s}"
        )));
    }
    if r == 0 || r > m {
        return Err(Error::InvalidParameter(format!("r = {r} outside 1..={m}")));
    }
    Ok(())
}

/// Runs the construction without the `r != m - s - 1` guard, taking
/// `L1 = I_{K_m \ K_r, s} ∩ <x_r>`. The result is not guaranteed to be a
/// splitting; feed it to [`verify_ek`].
pub fn build_split_unchecked(m: usize, s: u32, r: usize) -> Result<SplitCertificate> {
    check_domain(m, s, r)?;
    build_split(m, s, r, LeftForm::Intersection)
}

fn build_split(m: usize, s: u32, r: usize, form: LeftForm) -> Result<SplitCertificate> {
    let ideal = restricted_ideal(RestrictedIdealSpec::outside(m, r, s))?;
    let (with_r, without_r): (Vec<Monomial>, Vec<Monomial>) = ideal
        .generators()
        .iter()
        .cloned()
        .partition(|w| w.exponent(r) > 0);
    let left = match form {
        LeftForm::Generators => MonomialIdeal::minimize_unchecked(m, with_r),
        LeftForm::Intersection => ideal.intersect(&MonomialIdeal::minimize_unchecked(
            m,
            vec![Monomial::var(r, m)?],
        ))?,
    };
    let right = MonomialIdeal::minimize_unchecked(m, without_r);
    let meet = left.intersect(&right)?;

    let mut map = Vec::with_capacity(meet.len());
    for w in meet.generators() {
        let phi_hat = w.div_var(r)?.ok_or_else(|| {
            Error::InvalidParameter(format!("{w} in G(L1 ∩ L2) is not divisible by x{r}"))
        })?;
        let phi = phi_rule(w, r, s)?;
        map.push(SplitEntry {
            w: w.clone(),
            phi,
            phi_hat,
        });
    }
    Ok(SplitCertificate {
        params: Some(SplitParams { m, r, s }),
        ideal,
        left,
        right,
        map,
    })
}

/// The left half of the splitting function.
///
/// With `a` the exponents of `w`, take the smallest `j != r` such that the
/// exponents other than `a_r, a_j` sum to `s` and `a_j` equals their
/// maximum `a_max`; then the smallest `t ∉ {j, r}` with `a_t = a_max`.
/// The image is `w / x_j` if a third index `l ∉ {j, t, r}` also attains
/// `a_max`, and `w / (x_j x_t)` otherwise.
pub fn phi_rule(w: &Monomial, r: usize, s: u32) -> Result<Monomial> {
    let m = w.ambient();
    let a = w.exponents();
    let total: u64 = a.iter().map(|&e| e as u64).sum();
    let max_excluding = |skip: usize| -> u32 {
        (1..=m)
            .filter(|&k| k != r && k != skip)
            .map(|k| a[k - 1])
            .max()
            .unwrap_or(0)
    };
    let j = (1..=m)
        .filter(|&j| j != r)
        .find(|&j| {
            total - a[r - 1] as u64 - a[j - 1] as u64 == s as u64 && a[j - 1] == max_excluding(j)
        })
        .ok_or_else(|| {
            Error::InvalidParameter(format!("no admissible index j for {w} (r = {r}, s = {s})"))
        })?;
    let a_max = a[j - 1];
    let t = (1..=m)
        .find(|&k| k != j && k != r && a[k - 1] == a_max)
        .ok_or_else(|| Error::InvalidParameter(format!("no admissible index t for {w}")))?;
    let third = (1..=m).any(|l| l != j && l != t && l != r && a[l - 1] == a_max);

    let mut exps = a.to_vec();
    exps[j - 1] -= 1;
    if !third {
        exps[t - 1] -= 1;
    }
    Ok(Monomial::new(exps))
}

/// Certificates for `r = m, m-1, ..., 1`. Each step's `L1` is the next
/// step's ideal.
pub fn split_chain(m: usize, s: u32) -> Result<Vec<SplitCertificate>> {
    check_domain(m, s, m)?;
    if let Some(r) = (1..=m).rev().find(|&r| excluded(m, s, r)) {
        return Err(Error::ChainBroken { m, s, r });
    }
    let chain: Vec<SplitCertificate> = (1..=m)
        .rev()
        .map(|r| theorem_split(m, s, r))
        .collect::<Result<_>>()?;
    debug_assert!(chain.windows(2).all(|p| p[0].left == p[1].ideal));
    Ok(chain)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Phi,
    PhiHat,
}

/// One failed condition, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `G(I)` is not the disjoint union of `G(J)` and `G(K)`.
    NotPartition(String),
    /// The map's domain differs from `G(J ∩ K)`.
    DomainMismatch {
        missing: Vec<Monomial>,
        extra: Vec<Monomial>,
    },
    PhiNotInLeft {
        w: Monomial,
        phi: Monomial,
    },
    PhiHatNotInRight {
        w: Monomial,
        phi_hat: Monomial,
    },
    /// Condition (1): `lcm(φ(w), φ̂(w)) != w`.
    LcmMismatch {
        w: Monomial,
        lcm: Monomial,
    },
    /// Condition (2): `lcm(side(S))` does not properly divide `lcm(S)`.
    NotStrict {
        side: Side,
        subset: Vec<Monomial>,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list = |v: &[Monomial]| {
            v.iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            Violation::NotPartition(msg) => write!(f, "not a partition: {msg}"),
            Violation::DomainMismatch { missing, extra } => write!(
                f,
                "map domain differs from G(J ∩ K): missing [{}], extra [{}]",
                list(missing),
                list(extra)
            ),
            Violation::PhiNotInLeft { w, phi } => write!(f, "phi({w}) = {phi} is not in G(J)"),
            Violation::PhiHatNotInRight { w, phi_hat } => {
                write!(f, "phi_hat({w}) = {phi_hat} is not in G(K)")
            }
            Violation::LcmMismatch { w, lcm } => {
                write!(f, "lcm(phi({w}), phi_hat({w})) = {lcm} != {w}")
            }
            Violation::NotStrict { side, subset } => write!(
                f,
                "lcm({}(S)) does not strictly divide lcm(S) for S = {{{}}}",
                match side {
                    Side::Phi => "phi",
                    Side::PhiHat => "phi_hat",
                },
                list(subset)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid {
        /// False when the subset condition was only sampled.
        exhaustive: bool,
        subsets_checked: u64,
    },
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Valid { .. } => &[],
            Verdict::Invalid(v) => v,
        }
    }
}

/// How condition (2) is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetCheck {
    /// Every nonempty subset; refuses domains larger than `cap`.
    Exhaustive { cap: usize },
    /// `samples` random nonempty subsets drawn from a seeded generator.
    Sampled { samples: u64, seed: u64 },
}

/// Check every defining condition of an Eliahou–Kervaire splitting.
pub fn verify_ek(cert: &SplitCertificate, subset_cap: usize) -> Result<Verdict> {
    verify_ek_with(cert, SubsetCheck::Exhaustive { cap: subset_cap })
}

pub fn verify_ek_with(cert: &SplitCertificate, check: SubsetCheck) -> Result<Verdict> {
    let amb = cert.ideal.ambient();
    for other in [&cert.left, &cert.right] {
        if other.ambient() != amb {
            return Err(Error::AmbientMismatch {
                left: amb,
                right: other.ambient(),
            });
        }
    }
    if let SubsetCheck::Exhaustive { cap } = check {
        if cert.map.len() > cap {
            return Err(Error::cap("subset", cert.map.len(), cap));
        }
    }

    let mut violations = Vec::new();

    let left = cert.left.generators();
    let right = cert.right.generators();
    if let Some(w) = left.iter().find(|w| right.contains(w)) {
        violations.push(Violation::NotPartition(format!(
            "{w} lies in both G(J) and G(K)"
        )));
    }
    let mut union: Vec<Monomial> = left.iter().chain(right).cloned().collect();
    union.sort();
    union.dedup();
    if union.as_slice() != cert.ideal.generators() {
        violations.push(Violation::NotPartition(format!(
            "G(J) ∪ G(K) = [{}] but G(I) = [{}]",
            union
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            cert.ideal
        )));
    }

    let meet = cert.left.intersect(&cert.right)?;
    let mut domain: Vec<Monomial> = cert.map.iter().map(|e| e.w.clone()).collect();
    domain.sort();
    let missing: Vec<Monomial> = meet
        .generators()
        .iter()
        .filter(|w| domain.binary_search(w).is_err())
        .cloned()
        .collect();
    let extra: Vec<Monomial> = domain
        .iter()
        .filter(|w| meet.generators().binary_search(w).is_err())
        .cloned()
        .collect();
    if !missing.is_empty() || !extra.is_empty() || domain.windows(2).any(|p| p[0] == p[1]) {
        violations.push(Violation::DomainMismatch { missing, extra });
    }

    for e in &cert.map {
        for m in [&e.w, &e.phi, &e.phi_hat] {
            if m.ambient() != amb {
                return Err(Error::AmbientMismatch {
                    left: amb,
                    right: m.ambient(),
                });
            }
        }
        if left.binary_search(&e.phi).is_err() {
            violations.push(Violation::PhiNotInLeft {
                w: e.w.clone(),
                phi: e.phi.clone(),
            });
        }
        if right.binary_search(&e.phi_hat).is_err() {
            violations.push(Violation::PhiHatNotInRight {
                w: e.w.clone(),
                phi_hat: e.phi_hat.clone(),
            });
        }
        let l = e.phi.lcm_unchecked(&e.phi_hat);
        if l != e.w {
            violations.push(Violation::LcmMismatch {
                w: e.w.clone(),
                lcm: l,
            });
        }
    }

    let (witness, checked, exhaustive) = match check {
        SubsetCheck::Exhaustive { .. } => {
            let (w, n) = exhaustive_subsets(&cert.map);
            (w, n, true)
        }
        SubsetCheck::Sampled { samples, seed } => {
            let (w, n) = sampled_subsets(&cert.map, samples, seed);
            (w, n, false)
        }
    };
    if let Some((side, idx)) = witness {
        violations.push(Violation::NotStrict {
            side,
            subset: idx.into_iter().map(|k| cert.map[k].w.clone()).collect(),
        });
    }

    if violations.is_empty() {
        Ok(Verdict::Valid {
            exhaustive,
            subsets_checked: checked,
        })
    } else {
        Ok(Verdict::Invalid(violations))
    }
}

fn strict(side: &[u32], whole: &[u32]) -> bool {
    side.iter().zip(whole).all(|(a, b)| a <= b) && side != whole
}

fn fold_max(acc: &mut [u32], m: &[u32]) {
    for (a, &b) in acc.iter_mut().zip(m) {
        *a = (*a).max(b);
    }
}

/// Running lcms of `S`, `phi(S)` and `phi_hat(S)` for the subset on top of
/// the walk.
struct Walk<'a> {
    map: &'a [SplitEntry],
    chosen: Vec<usize>,
    lcms: Vec<[Vec<u32>; 3]>,
    count: u64,
}

impl Walk<'_> {
    fn push(&mut self, k: usize) {
        let e = &self.map[k];
        let mut top = match self.lcms.last() {
            Some(t) => t.clone(),
            None => {
                let amb = e.w.ambient();
                [vec![0; amb], vec![0; amb], vec![0; amb]]
            }
        };
        fold_max(&mut top[0], e.w.exponents());
        fold_max(&mut top[1], e.phi.exponents());
        fold_max(&mut top[2], e.phi_hat.exponents());
        self.lcms.push(top);
        self.chosen.push(k);
    }

    fn pop(&mut self) {
        self.lcms.pop();
        self.chosen.pop();
    }

    fn visit(&mut self, next: usize) -> Option<(Side, Vec<usize>)> {
        self.count += 1;
        let [w, p, h] = self
            .lcms
            .last()
            .expect("walk starts from a nonempty subset");
        if !strict(p, w) {
            return Some((Side::Phi, self.chosen.clone()));
        }
        if !strict(h, w) {
            return Some((Side::PhiHat, self.chosen.clone()));
        }
        for k in next..self.map.len() {
            self.push(k);
            let found = self.visit(k + 1);
            self.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Depth-first walk over all nonempty subsets whose smallest element is
/// `first`. Returns the first failing subset in walk order.
fn walk_from(map: &[SplitEntry], first: usize) -> (Option<(Side, Vec<usize>)>, u64) {
    let mut walk = Walk {
        map,
        chosen: Vec::new(),
        lcms: Vec::new(),
        count: 0,
    };
    walk.push(first);
    let found = walk.visit(first + 1);
    (found, walk.count)
}

fn exhaustive_subsets(map: &[SplitEntry]) -> (Option<(Side, Vec<usize>)>, u64) {
    let results: Vec<_> = (0..map.len())
        .into_par_iter()
        .map(|first| walk_from(map, first))
        .collect();
    let checked = results.iter().map(|r| r.1).sum();
    let witness = results.into_iter().find_map(|r| r.0);
    (witness, checked)
}

fn sampled_subsets(
    map: &[SplitEntry],
    samples: u64,
    seed: u64,
) -> (Option<(Side, Vec<usize>)>, u64) {
    if map.is_empty() {
        return (None, 0);
    }
    let amb = map[0].w.ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..samples {
        let mut subset: Vec<usize> = Vec::new();
        while subset.is_empty() {
            subset = (0..map.len()).filter(|_| rng.gen_bool(0.5)).collect();
        }
        let mut w = vec![0; amb];
        let mut p = vec![0; amb];
        let mut h = vec![0; amb];
        for &k in &subset {
            fold_max(&mut w, map[k].w.exponents());
            fold_max(&mut p, map[k].phi.exponents());
            fold_max(&mut h, map[k].phi_hat.exponents());
        }
        if !strict(&p, &w) {
            return (Some((Side::Phi, subset)), n + 1);
        }
        if !strict(&h, &w) {
            return (Some((Side::PhiHat, subset)), n + 1);
        }
    }
    (None, samples)
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    w: String,
    phi: String,
    phi_hat: String,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    s: Option<u32>,
    ambient: usize,
    ideal: Vec<String>,
    left: Vec<String>,
    right: Vec<String>,
    map: Vec<EntryJson>,
}

fn texts(i: &MonomialIdeal) -> Vec<String> {
    i.generators().iter().map(|g| g.to_string()).collect()
}

fn from_texts(v: &[String], ambient: usize) -> Result<MonomialIdeal> {
    let gens = v
        .iter()
        .map(|t| Monomial::parse(t, ambient))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimize(ambient, gens)
}

impl SplitCertificate {
    pub fn to_json(&self) -> String {
        let dto = CertificateJson {
            m: self.params.map(|p| p.m),
            r: self.params.map(|p| p.r),
            s: self.params.map(|p| p.s),
            ambient: self.ideal.ambient(),
            ideal: texts(&self.ideal),
            left: texts(&self.left),
            right: texts(&self.right),
            map: self
                .map
                .iter()
                .map(|e| EntryJson {
                    w: e.w.to_string(),
                    phi: e.phi.to_string(),
                    phi_hat: e.phi_hat.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&dto).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: CertificateJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let amb = dto.ambient;
        let params = match (dto.m, dto.r, dto.s) {
            (Some(m), Some(r), Some(s)) => Some(SplitParams { m, r, s }),
            _ => None,
        };
        let map = dto
            .map
            .iter()
            .map(|e| {
                Ok(SplitEntry {
                    w: Monomial::parse(&e.w, amb)?,
                    phi: Monomial::parse(&e.phi, amb)?,
                    phi_hat: Monomial::parse(&e.phi_hat, amb)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SplitCertificate {
            params,
            ideal: from_texts(&dto.ideal, amb)?,
            left: from_texts(&dto.left, amb)?,
            right: from_texts(&dto.right, amb)?,
            map,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::complete_symbolic_gens;

    fn mono(t: &str, m: usize) -> Monomial {
        Monomial::parse(t, m).unwrap()
    }

    #[test]
    fn corollary_case_r_equals_m() {
        for s in 2..6 {
            let cert = theorem_split(3, s, 3).unwrap();
            assert_eq!(cert.ideal, complete_symbolic_gens(3, s).unwrap());
            assert_eq!(
                cert.left,
                restricted_ideal(RestrictedIdealSpec::outside(3, 2, s)).unwrap()
            );
            assert_eq!(
                cert.right,
                restricted_ideal(RestrictedIdealSpec::inside(3, 2, s)).unwrap()
            );
            assert!(verify_ek(&cert, DEFAULT_SUBSET_CAP).unwrap().is_valid());
        }
    }

    #[test]
    fn excluded_parameter() {
        assert_eq!(
            theorem_split(5, 2, 2),
            Err(Error::ExcludedParameter { m: 5, s: 2, r: 2 })
        );
        assert!(theorem_split(2, 2, 1).is_err());
        assert!(theorem_split(3, 1, 1).is_err());
        assert!(theorem_split(3, 2, 0).is_err());
        assert!(theorem_split(3, 2, 4).is_err());
    }

    #[test]
    fn forced_excluded_case_fails_verification() {
        let cert = build_split_unchecked(5, 2, 2).unwrap();
        let w = mono("x2*x3*x4*x5", 5);
        let entry = cert.map.iter().find(|e| e.w == w).unwrap();
        assert_eq!(entry.phi, mono("x2*x4*x5", 5));
        let verdict = verify_ek(&cert, DEFAULT_SUBSET_CAP).unwrap();
        assert!(verdict.violations().contains(&Violation::PhiNotInLeft {
            w,
            phi: mono("x2*x4*x5", 5)
        }));
    }

    #[test]
    fn meet_is_x_r_times_right() {
        for m in 3..6 {
            for s in 2..5 {
                for r in 1..=m {
                    let Ok(cert) = theorem_split(m, s, r) else {
                        continue;
                    };
                    if (r as i64) < m as i64 - s as i64 - 1 {
                        assert!(cert.left.is_zero() && cert.map.is_empty());
                        assert_eq!(cert.ideal.len(), 1);
                        assert!(verify_ek(&cert, DEFAULT_SUBSET_CAP).unwrap().is_valid());
                        continue;
                    }
                    assert_eq!(cert.left, build_split_unchecked(m, s, r).unwrap().left);
                    let scaled = cert.right.scale(r).unwrap();
                    assert_eq!(cert.left.intersect(&cert.right).unwrap(), scaled);
                    for e in &cert.map {
                        assert_eq!(e.phi.lcm(&e.phi_hat).unwrap(), e.w);
                        assert!(cert.left.generators().contains(&e.phi));
                        assert!(e.phi.degree() > s);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_equal_to_w_is_caught() {
        let mut cert = theorem_split(3, 3, 3).unwrap();
        let w = cert.map[0].w.clone();
        cert.map[0].phi = w.clone();
        let verdict = verify_ek(&cert, DEFAULT_SUBSET_CAP).unwrap();
        assert!(verdict.violations().iter().any(|v| matches!(
            v,
            Violation::NotStrict { side: Side::Phi, subset } if subset == &vec![w.clone()]
        )));
    }

    #[test]
    fn partition_and_domain_are_checked() {
        let mut cert = theorem_split(3, 2, 3).unwrap();
        cert.map.pop();
        let v = verify_ek(&cert, DEFAULT_SUBSET_CAP).unwrap();
        assert!(matches!(
            v.violations()[0],
            Violation::DomainMismatch { .. }
        ));

        let mut cert = theorem_split(3, 2, 3).unwrap();
        cert.right = cert.ideal.clone();
        let v = verify_ek(&cert, DEFAULT_SUBSET_CAP).unwrap();
        assert!(matches!(v.violations()[0], Violation::NotPartition(_)));
    }

    #[test]
    fn subset_cap_and_sampling() {
        let cert = theorem_split(4, 3, 4).unwrap();
        let n = cert.map.len();
        assert!(matches!(
            verify_ek(&cert, n - 1),
            Err(Error::CapExceeded { .. })
        ));
        let v = verify_ek_with(
            &cert,
            SubsetCheck::Sampled {
                samples: 200,
                seed: 7,
            },
        )
        .unwrap();
        assert_eq!(
            v,
            Verdict::Valid {
                exhaustive: false,
                subsets_checked: 200
            }
        );
        match verify_ek(&cert, n).unwrap() {
            Verdict::Valid {
                exhaustive,
                subsets_checked,
            } => {
                assert!(exhaustive);
                assert_eq!(subsets_checked, (1u64 << n) - 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn chains() {
        for s in 2..5 {
            let chain = split_chain(3, s).unwrap();
            assert_eq!(chain.len(), 3);
            for pair in chain.windows(2) {
                assert_eq!(pair[0].left, pair[1].ideal);
            }
            let last = chain.last().unwrap();
            assert_eq!(
                last.left,
                restricted_ideal(RestrictedIdealSpec::outside(3, 0, s)).unwrap()
            );
        }
        assert_eq!(split_chain(4, 4).unwrap().len(), 4);
        assert_eq!(
            split_chain(5, 2),
            Err(Error::ChainBroken { m: 5, s: 2, r: 2 })
        );
    }

    #[test]
    fn json_round_trip() {
        let cert = theorem_split(4, 3, 2).unwrap();
        let back = SplitCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        assert!(SplitCertificate::from_json("{").is_err());
    }
}
