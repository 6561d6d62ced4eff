//! Exponent-vector monomials and monomial ideals given by their minimal
//! generators.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set in ascending
//! lexicographic order of exponent vectors, so two ideals are equal exactly
//! when their stored generator lists are equal. The zero ideal has no
//! generators; the unit ideal has the single generator `1`.

use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the total degree accepted by graded enumeration.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// A monomial `x1^a1 * ... * xm^am`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial in `ambient` variables.
    pub fn one(ambient: usize) -> Self {
        Monomial {
            exps: vec![0; ambient],
        }
    }

    /// The variable `x_index` (1-based).
    pub fn var(index: usize, ambient: usize) -> Result<Self> {
        check_index(index, ambient)?;
        let mut exps = vec![0; ambient];
        exps[index - 1] = 1;
        Ok(Monomial { exps })
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// 0-based indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k)
    }

    fn same_ambient(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::AmbientMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ambient(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ambient(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.same_ambient(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        }))
    }

    /// Multiply by `x_index` (1-based).
    pub fn times_var(&self, index: usize) -> Result<Monomial> {
        check_index(index, self.ambient())?;
        let mut exps = self.exps.clone();
        exps[index - 1] += 1;
        Ok(Monomial { exps })
    }

    /// Divide by `x_index` (1-based); `None` if the variable does not occur.
    pub fn div_var(&self, index: usize) -> Result<Option<Monomial>> {
        check_index(index, self.ambient())?;
        if self.exps[index - 1] == 0 {
            return Ok(None);
        }
        let mut exps = self.exps.clone();
        exps[index - 1] -= 1;
        Ok(Some(Monomial { exps }))
    }

    /// Parse the text form `x1^2*x2*x3^4` (or `1`) in `ambient` variables.
    pub fn parse(text: &str, ambient: usize) -> Result<Monomial> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut exps = vec![0u32; ambient];
        for factor in text.split('*') {
            let factor = factor.trim();
            if factor == "1" {
                continue;
            }
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad factor `{factor}` in `{text}`")))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
            if idx == 0 || idx > ambient {
                return Err(Error::Parse(format!(
                    "variable x{idx} outside x1..x{ambient}"
                )));
            }
            exps[idx - 1] += exp;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn check_index(index: usize, ambient: usize) -> Result<()> {
    if index == 0 || index > ambient {
        return Err(Error::IndexOutOfRange { index, ambient });
    }
    Ok(())
}

/// Whether [`MonomialIdeal::graded_dimension`] counts monomials inside the
/// ideal or inside the quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradedMode {
    Ideal,
    Quotient,
}

/// A monomial ideal represented by its minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: vec![Monomial::one(ambient)],
        }
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimize<I>(ambient: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: g.ambient(),
                });
            }
            all.push(g);
        }
        Ok(Self::minimize_unchecked(ambient, all))
    }

    pub(crate) fn minimize_unchecked(ambient: usize, mut all: Vec<Monomial>) -> Self {
        // A divisor has degree at most that of its multiple, so scanning by
        // ascending degree only needs to test against already kept elements.
        all.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for w in all {
            if !kept.iter().any(|g| g.divides_unchecked(&w)) {
                kept.push(w);
            }
        }
        kept.sort_unstable();
        MonomialIdeal {
            ambient,
            gens: kept,
        }
    }

    /// Parse a comma-separated list of monomials; the empty string is the
    /// zero ideal.
    pub fn parse(text: &str, ambient: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Self::zero(ambient));
        }
        let gens = text
            .split(',')
            .map(|t| Monomial::parse(t, ambient))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::minimize_unchecked(ambient, gens))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// True iff some minimal generator divides `w`.
    pub fn contains(&self, w: &Monomial) -> Result<bool> {
        if w.ambient() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: w.ambient(),
            });
        }
        Ok(self.contains_unchecked(w))
    }

    pub(crate) fn contains_unchecked(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(w))
    }

    /// True iff `self` is contained in `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::minimize_unchecked(self.ambient, lcms))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::minimize_unchecked(self.ambient, all))
    }

    /// `x_index * I` (1-based index).
    pub fn scale(&self, index: usize) -> Result<MonomialIdeal> {
        check_index(index, self.ambient)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = g.exps.clone();
                exps[index - 1] += 1;
                Monomial { exps }
            })
            .collect();
        // Multiplying by a monomial preserves divisibility, hence minimality,
        // and the lexicographic order.
        Ok(MonomialIdeal {
            ambient: self.ambient,
            gens,
        })
    }

    /// `u * I` for a monomial `u`.
    pub fn scale_by(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.ambient() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: u.ambient(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(u))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            ambient: self.ambient,
            gens,
        })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        Ok(Self::minimize_unchecked(self.ambient, prods))
    }

    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::InvalidParameter(
                "power exponent must be >= 1".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Least common multiple of all generators (`1` for the zero ideal).
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.ambient), |acc, g| acc.lcm_unchecked(g))
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Number of monomials of total degree `j` inside the ideal or inside
    /// the quotient, depending on `mode`.
    pub fn graded_dimension(&self, j: u32, mode: GradedMode, degree_cap: u32) -> Result<u128> {
        if j > degree_cap {
            return Err(Error::cap("degree", j as usize, degree_cap as usize));
        }
        let mut inside: u128 = 0;
        let mut total: u128 = 0;
        for_each_composition(j, self.ambient, |exps| {
            total += 1;
            if self
                .gens
                .iter()
                .any(|g| g.exps.iter().zip(exps).all(|(a, b)| a <= b))
            {
                inside += 1;
            }
        });
        Ok(match mode {
            GradedMode::Ideal => inside,
            GradedMode::Quotient => total - inside,
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Calls `f` on every vector of `parts` nonnegative integers summing to
/// `total`, in ascending lexicographic order.
pub(crate) fn for_each_composition<F: FnMut(&[u32])>(total: u32, parts: usize, mut f: F) {
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = vec![0u32; parts];
    fn rec<F: FnMut(&[u32])>(buf: &mut [u32], pos: usize, left: u32, f: &mut F) {
        if pos + 1 == buf.len() {
            buf[pos] = left;
            f(buf);
            return;
        }
        for v in 0..=left {
            buf[pos] = v;
            rec(buf, pos + 1, left - v, f);
        }
    }
    rec(&mut buf, 0, total, &mut f);
}

/// Binomial coefficient, exact in `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
