//! Class functions on the symmetric group.
//!
//! A [`ClassFunction`] on `S_m` stores one exact rational per cycle type,
//! in the order produced by [`partitions`]. Irreducible characters come from
//! the Murnaghan–Nakayama rule; the remaining constructors are the classical
//! descriptions of `Lie(k)` and the induced modules used to cross-check the
//! bracket engine.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{enumerate_syt, partitions, Partition, DEFAULT_SYT_LIMIT};
use crate::error::{Error, Result};

/// Largest degree for which irreducible characters are evaluated by default.
pub const CHARACTER_DEGREE_LIMIT: usize = 12;

/// A conjugacy class of `S_m`, named by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub class_size: BigInt,
}

impl ConjugacyClass {
    pub fn new(cycle_type: Partition) -> Self {
        let class_size = factorial(cycle_type.size()) / centralizer_order(&cycle_type);
        ConjugacyClass { cycle_type, class_size }
    }
}

/// All conjugacy classes of `S_m` in [`partitions`] order.
pub fn conjugacy_classes(m: usize) -> Vec<ConjugacyClass> {
    partitions(m).into_iter().map(ConjugacyClass::new).collect()
}

pub(crate) fn factorial(m: usize) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// `z_μ = ∏ i^{a_i} a_i!`, the order of the centralizer of a permutation of
/// cycle type `μ`.
pub fn centralizer_order(cycle_type: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &a) in cycle_type.multiplicities().iter().enumerate().skip(1) {
        if a > 0 {
            z *= BigInt::from(i).pow(a as u32) * factorial(a);
        }
    }
    z
}

/// A rational-valued function on the conjugacy classes of `S_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    m: usize,
    values: Vec<BigRational>,
}

impl ClassFunction {
    /// Values must follow the order of [`partitions`]`(m)`.
    pub fn new(m: usize, values: Vec<BigRational>) -> Result<Self> {
        let expected = partitions(m).len();
        if values.len() != expected {
            return Err(Error::Invalid(format!(
                "class function on S_{m} needs {expected} values, got {}",
                values.len()
            )));
        }
        Ok(ClassFunction { m, values })
    }

    pub fn from_fn(m: usize, f: impl FnMut(&Partition) -> BigRational) -> Self {
        let values = partitions(m).iter().map(f).collect();
        ClassFunction { m, values }
    }

    pub fn zero(m: usize) -> Self {
        ClassFunction::from_fn(m, |_| BigRational::zero())
    }

    pub fn trivial(m: usize) -> Self {
        ClassFunction::from_fn(m, |_| BigRational::one())
    }

    pub fn sign(m: usize) -> Self {
        ClassFunction::from_fn(m, |mu| BigRational::from_integer(cycle_type_sign(mu).into()))
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Value on the class with the given cycle type.
    pub fn value(&self, cycle_type: &Partition) -> Option<&BigRational> {
        if cycle_type.size() != self.m {
            return None;
        }
        partitions(self.m)
            .iter()
            .position(|mu| mu == cycle_type)
            .map(|i| &self.values[i])
    }

    /// The value at the identity, which is the dimension for a character.
    pub fn dimension(&self) -> &BigRational {
        self.values.last().expect("S_m has at least one class")
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction { m: self.m, values: self.values.iter().map(|v| v * c).collect() }
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<ClassFunction> {
        if self.m != other.m {
            return Err(Error::DegreeMismatch(self.m, other.m));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(ClassFunction { m: self.m, values })
    }

    /// Restriction from `S_m` to `S_{m-1}`: evaluate on `ν ∪ (1)`.
    pub fn restrict(&self) -> Result<ClassFunction> {
        if self.m < 2 {
            return Err(Error::Invalid("cannot restrict below S_1".into()));
        }
        let classes = partitions(self.m);
        let mut lookup = HashMap::new();
        for (mu, v) in classes.iter().zip(&self.values) {
            lookup.insert(mu.clone(), v.clone());
        }
        Ok(ClassFunction::from_fn(self.m - 1, |nu| {
            let mut parts = nu.parts().to_vec();
            parts.push(1);
            lookup[&Partition::from_unsorted(parts)].clone()
        }))
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = partitions(self.m)
            .iter()
            .zip(&self.values)
            .map(|(mu, v)| format!("({mu}): {v}"))
            .collect();
        write!(f, "S_{} {{{}}}", self.m, entries.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct ClassValueJson {
    cycle_type: String,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ClassFunctionJson {
    m: usize,
    values: Vec<ClassValueJson>,
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let values = partitions(self.m)
            .iter()
            .zip(&self.values)
            .map(|(mu, v)| ClassValueJson { cycle_type: mu.to_string(), value: rational_string(v) })
            .collect();
        ClassFunctionJson { m: self.m, values }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ClassFunctionJson::deserialize(deserializer)?;
        if raw.m > CHARACTER_DEGREE_LIMIT {
            return Err(D::Error::custom(format!("degree {} above limit", raw.m)));
        }
        let mut by_type = HashMap::new();
        for entry in raw.values {
            let mu: Partition = entry.cycle_type.parse().map_err(D::Error::custom)?;
            let v = parse_rational(&entry.value).map_err(D::Error::custom)?;
            if by_type.insert(mu, v).is_some() {
                return Err(D::Error::custom("repeated cycle type"));
            }
        }
        let classes = partitions(raw.m);
        if by_type.len() != classes.len() {
            return Err(D::Error::custom("class function must list every cycle type exactly once"));
        }
        let values = classes
            .iter()
            .map(|mu| by_type.remove(mu).ok_or_else(|| D::Error::custom(format!("missing or foreign class ({mu})"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ClassFunction { m: raw.m, values })
    }
}

/// Renders `p/q`, or `p` for integers.
pub fn rational_string(v: &BigRational) -> String {
    v.to_string()
}

/// Parses `p/q` or an integer, rejecting zero denominators.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn cycle_type_sign(mu: &Partition) -> i32 {
    if (mu.size() - mu.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A direct sum of irreducibles: `(shape, multiplicity)` pairs sorted in
/// [`partitions`] order with zero multiplicities dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Decomposition {
    terms: Vec<(Partition, u64)>,
}

impl Decomposition {
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut merged: Vec<(Partition, u64)> = Vec::new();
        for (shape, mult) in terms {
            match merged.iter_mut().find(|(p, _)| *p == shape) {
                Some((_, m)) => *m += mult,
                None => merged.push((shape, mult)),
            }
        }
        merged.retain(|(_, m)| *m > 0);
        // partitions() order: larger first row first, then lexicographically larger
        merged.sort_by(|a, b| b.0.cmp(&a.0));
        Decomposition { terms: merged }
    }

    pub fn terms(&self) -> &[(Partition, u64)] {
        &self.terms
    }

    pub fn multiplicity(&self, shape: &Partition) -> u64 {
        self.terms.iter().find(|(p, _)| p == shape).map_or(0, |(_, m)| *m)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.iter().all(|(_, m)| *m == 1)
    }

    /// `Σ mult · f^λ`.
    pub fn dimension(&self) -> u64 {
        self.terms.iter().map(|(p, m)| m * p.hook_dim()).sum()
    }

    /// The character `Σ mult · χ^λ`.
    pub fn character(&self, m: usize) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(m);
        for (shape, mult) in &self.terms {
            let chi = irreducible_character(shape)?;
            acc = acc.add(&chi.scale(&BigRational::from_integer((*mult).into())))?;
        }
        Ok(acc)
    }

    /// Sum of the two decompositions.
    pub fn merge(&self, other: &Decomposition) -> Decomposition {
        Decomposition::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, m)| if *m == 1 { format!("S^({p})") } else { format!("{m} S^({p})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (p, m) in &self.terms {
            map.serialize_entry(&p.to_string(), m)?;
        }
        map.end()
    }
}

/// Beta-set removal of a rim hook of length `len`, returning the signed
/// remaining shapes.
fn remove_rim_hooks(shape: &[usize], len: usize) -> Vec<(Vec<usize>, i64)> {
    let l = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < len || beta.contains(&(b - len)) {
            continue;
        }
        let target = b - len;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (l - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

type MnCache = HashMap<(Vec<usize>, Vec<usize>), i64>;

fn mn_value(shape: &[usize], cycles: &[usize], cache: &mut MnCache) -> i64 {
    if cycles.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = cache.get(&key) {
        return v;
    }
    let value = remove_rim_hooks(shape, cycles[0])
        .into_iter()
        .map(|(rest, sign)| sign * mn_value(&rest, &cycles[1..], cache))
        .sum();
    cache.insert(key, value);
    value
}

/// The irreducible character `χ^λ`, by the Murnaghan–Nakayama rule.
pub fn irreducible_character(shape: &Partition) -> Result<ClassFunction> {
    irreducible_character_bounded(shape, CHARACTER_DEGREE_LIMIT)
}

pub fn irreducible_character_bounded(shape: &Partition, limit: usize) -> Result<ClassFunction> {
    let m = shape.size();
    if m > limit {
        return Err(Error::BoundExceeded { what: "character degree", size: m, bound: limit });
    }
    let mut cache = MnCache::new();
    Ok(ClassFunction::from_fn(m, |mu| {
        BigRational::from_integer(mn_value(shape.parts(), mu.parts(), &mut cache).into())
    }))
}

/// The full character table of `S_m`, rows in [`partitions`] order.
pub fn character_table(m: usize) -> Result<Vec<ClassFunction>> {
    partitions(m).iter().map(irreducible_character).collect()
}

/// `(1/m!) Σ_classes |class| χ ψ`.
pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Result<BigRational> {
    if chi.m != psi.m {
        return Err(Error::DegreeMismatch(chi.m, psi.m));
    }
    let mut total = BigRational::zero();
    for ((class, a), b) in conjugacy_classes(chi.m).iter().zip(&chi.values).zip(&psi.values) {
        total += a * b * BigRational::from_integer(class.class_size.clone());
    }
    Ok(total / BigRational::from_integer(factorial(chi.m)))
}

/// Splits a character into irreducibles. Fails when a multiplicity is not a
/// nonnegative integer or the irreducibles do not account for the whole
/// class function.
pub fn decompose(chi: &ClassFunction) -> Result<Decomposition> {
    let mut terms = Vec::new();
    let mut residual = chi.clone();
    for shape in partitions(chi.m) {
        let irr = irreducible_character(&shape)?;
        let mult = inner_product(chi, &irr)?;
        if !mult.is_integer() || mult.is_negative() {
            return Err(Error::NotACharacter(format!(
                "multiplicity of S^({shape}) is {mult}"
            )));
        }
        let mult_int = mult.to_integer();
        if !mult_int.is_zero() {
            residual = residual.sub(&irr.scale(&mult))?;
            let mult = mult_int
                .to_u64()
                .ok_or_else(|| Error::NotACharacter(format!("multiplicity {mult_int} too large")))?;
            terms.push((shape, mult));
        }
    }
    if residual.values.iter().any(|v| !v.is_zero()) {
        return Err(Error::NotACharacter("irreducibles do not span the class function".into()));
    }
    Ok(Decomposition::from_terms(terms))
}

/// Character of `(sgn_a × sgn_b)` induced from `S_a × S_b` to `S_{a+b}`.
///
/// A permutation of cycle type `μ` fixes an `a`-subset exactly when the
/// subset is a union of cycles, and acts on such a subset pair with sign
/// `sgn(μ)`; the value is `sgn(μ)` times the number of cycle selections of
/// total length `a`.
pub fn induced_sign_young(a: usize, b: usize) -> Result<ClassFunction> {
    if a == 0 || b == 0 {
        return Err(Error::Invalid("Young subgroup factors must be nonempty".into()));
    }
    let m = a + b;
    Ok(ClassFunction::from_fn(m, |mu| {
        // ways[s] = number of cycle subsets with total length s
        let mut ways = vec![BigInt::zero(); a + 1];
        ways[0] = BigInt::one();
        for &len in mu.parts() {
            for s in (len..=a).rev() {
                let add = ways[s - len].clone();
                ways[s] += add;
            }
        }
        BigRational::from_integer(&ways[a] * cycle_type_sign(mu))
    }))
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Character induced to `S_k` from a faithful linear character of the cyclic
/// subgroup generated by a `k`-cycle.
///
/// The element `c^j` has cycle type `d^{k/d}` with `d = k / gcd(j, k)`, and
/// the faithful character values over all `j` of a given order `d` sum to
/// the Ramanujan sum `μ(d)`; so the induced value at `d^{k/d}` is
/// `μ(d) z_{d^{k/d}} / k` and zero at every other class.
pub fn induced_cyclic_character(k: usize) -> Result<ClassFunction> {
    if k < 2 {
        return Err(Error::Invalid(format!("cyclic induction needs k >= 2, got {k}")));
    }
    Ok(ClassFunction::from_fn(k, |mu| {
        let d = mu.parts()[0];
        if mu.parts().iter().any(|&p| p != d) {
            return BigRational::zero();
        }
        let z = centralizer_order(mu);
        BigRational::new(z * mobius(d), BigInt::from(k))
    }))
}

/// Number of standard tableaux of shape `λ ⊢ k` whose major index is
/// congruent to `residue` mod `k`.
pub fn kw_multiplicity_with_residue(shape: &Partition, k: usize, residue: usize) -> Result<u64> {
    if shape.size() != k {
        return Err(Error::DegreeMismatch(shape.size(), k));
    }
    if k == 0 || residue.gcd(&k) != 1 {
        return Err(Error::Invalid(format!("residue {residue} is not coprime to {k}")));
    }
    let tableaux = enumerate_syt(shape, DEFAULT_SYT_LIMIT)?;
    Ok(tableaux.iter().filter(|t| t.maj() % k == residue % k).count() as u64)
}

pub fn kw_multiplicity(shape: &Partition, k: usize) -> Result<u64> {
    kw_multiplicity_with_residue(shape, k, 1)
}

/// Induction from `S_m` to `S_{m+1}`: `Ind χ (μ) = a_1(μ) · χ(μ \ 1)`.
pub fn induce_to_next(chi: &ClassFunction) -> ClassFunction {
    let classes = partitions(chi.m);
    let lookup: HashMap<&Partition, &BigRational> = classes.iter().zip(&chi.values).collect();
    ClassFunction::from_fn(chi.m + 1, |mu| {
        let fixed = mu.multiplicities()[1];
        if fixed == 0 {
            return BigRational::zero();
        }
        let mut parts = mu.parts().to_vec();
        parts.pop();
        let nu = Partition::from_unsorted(parts);
        lookup[&nu] * BigRational::from_integer(fixed.into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_characters() {
        let chi = irreducible_character(&p("2,1")).unwrap();
        assert_eq!(chi.values(), &[q(-1), q(0), q(2)]);
        assert_eq!(chi.value(&p("1,1,1")), Some(&q(2)));
        for mu in partitions(5) {
            let triv = irreducible_character(&p("5")).unwrap();
            assert_eq!(triv.value(&mu), Some(&q(1)));
            let sgn = irreducible_character(&p("1^5")).unwrap();
            assert_eq!(sgn.value(&mu), Some(&q(cycle_type_sign(&mu) as i64)));
        }
    }

    #[test]
    fn identity_value_is_hook_dim() {
        for m in 1..=8 {
            for shape in partitions(m) {
                let chi = irreducible_character(&shape).unwrap();
                assert_eq!(chi.dimension(), &q(shape.hook_dim() as i64));
            }
        }
    }

    #[test]
    fn inner_products() {
        let c21 = irreducible_character(&p("2,1")).unwrap();
        let c3 = irreducible_character(&p("3")).unwrap();
        let c111 = irreducible_character(&p("1,1,1")).unwrap();
        assert_eq!(inner_product(&c21, &c21).unwrap(), q(1));
        assert_eq!(inner_product(&c3, &c111).unwrap(), q(0));
        let v23 = induced_sign_young(2, 1).unwrap();
        assert_eq!(inner_product(&v23, &c21).unwrap(), q(1));
        assert!(matches!(
            inner_product(&c21, &irreducible_character(&p("2")).unwrap()),
            Err(Error::DegreeMismatch(3, 2))
        ));
    }

    #[test]
    fn decompositions() {
        let d = decompose(&induced_sign_young(2, 1).unwrap()).unwrap();
        assert_eq!(d, Decomposition::from_terms([(p("1,1,1"), 1), (p("2,1"), 1)]));
        let d = decompose(&irreducible_character(&p("2,2")).unwrap()).unwrap();
        assert_eq!(d.terms(), &[(p("2,2"), 1)]);
        let d = decompose(&induced_sign_young(3, 2).unwrap()).unwrap();
        assert_eq!(
            d,
            Decomposition::from_terms([(p("1^5"), 1), (p("2,1,1,1"), 1), (p("2,2,1"), 1)])
        );
        assert_eq!(d.dimension(), 10);
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let half = irreducible_character(&p("2,1")).unwrap().scale(&BigRational::new(1.into(), 2.into()));
        assert!(matches!(decompose(&half), Err(Error::NotACharacter(_))));
        let neg = irreducible_character(&p("2,1")).unwrap().scale(&q(-1));
        assert!(matches!(decompose(&neg), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn induced_young_examples() {
        let reg = induced_sign_young(1, 1).unwrap();
        assert_eq!(reg.values(), &[q(0), q(2)]);
        assert_eq!(induced_sign_young(3, 2).unwrap().dimension(), &q(10));
    }

    #[test]
    fn cyclic_induction_examples() {
        let c3 = induced_cyclic_character(3).unwrap();
        assert_eq!(c3, irreducible_character(&p("2,1")).unwrap());
        assert_eq!(induced_cyclic_character(2).unwrap(), ClassFunction::sign(2));
        let c4 = induced_cyclic_character(4).unwrap();
        assert_eq!(c4.dimension(), &q(6));
        assert_eq!(
            decompose(&c4).unwrap(),
            Decomposition::from_terms([(p("3,1"), 1), (p("2,1,1"), 1)])
        );
    }

    #[test]
    fn kw_examples() {
        assert_eq!(kw_multiplicity(&p("2,1"), 3).unwrap(), 1);
        assert_eq!(kw_multiplicity(&p("4"), 4).unwrap(), 0);
        assert_eq!(kw_multiplicity(&p("2,1,1"), 4).unwrap(), 1);
        assert!(kw_multiplicity_with_residue(&p("2,2"), 4, 2).is_err());
        assert!(kw_multiplicity(&p("2,2"), 5).is_err());
    }

    #[test]
    fn induction_examples() {
        let up = induce_to_next(&irreducible_character(&p("2,1")).unwrap());
        assert_eq!(up.dimension(), &q(8));
        assert_eq!(
            decompose(&up).unwrap(),
            Decomposition::from_terms([(p("3,1"), 1), (p("2,2"), 1), (p("2,1,1"), 1)])
        );
        let reg = induce_to_next(&ClassFunction::trivial(1));
        assert_eq!(reg, induced_sign_young(1, 1).unwrap());
        let lie3_up = induce_to_next(&induced_cyclic_character(3).unwrap());
        let lie4 = induced_cyclic_character(4).unwrap();
        let d_up = decompose(&lie3_up).unwrap();
        let d4 = decompose(&lie4).unwrap();
        for (shape, mult) in d4.terms() {
            assert!(d_up.multiplicity(shape) >= *mult);
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for m in 1..=9 {
            let total: BigInt = conjugacy_classes(m).iter().map(|c| c.class_size.clone()).sum();
            assert_eq!(total, factorial(m));
        }
    }

    #[test]
    fn json_round_trip() {
        let chi = induced_cyclic_character(4).unwrap().scale(&BigRational::new(1.into(), 3.into()));
        let text = serde_json::to_string(&chi).unwrap();
        assert!(text.contains("\"cycle_type\":\"4\""));
        let back: ClassFunction = serde_json::from_str(&text).unwrap();
        assert_eq!(back, chi);
        assert!(serde_json::from_str::<ClassFunction>(r#"{"m":2,"values":[{"cycle_type":"2","value":"1"}]}"#).is_err());
        assert!(serde_json::from_str::<ClassFunction>(r#"{"m":1,"values":[{"cycle_type":"1","value":"1/0"}]}"#).is_err());
    }

    #[test]
    fn restriction_matches_branching() {
        let chi = irreducible_character(&p("3,2")).unwrap();
        let d = decompose(&chi.restrict().unwrap()).unwrap();
        assert_eq!(d, crate::combinatorics::restrict_irreducible(&p("3,2")).unwrap());
    }
}
