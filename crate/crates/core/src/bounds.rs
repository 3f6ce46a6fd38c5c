//! Closed-form size, threshold and dimension bounds.
//!
//! Formulas with fractional exponents come in two flavours: an `f64` evaluation for
//! display, and an exact predicate that decides the strict inequality by raising both
//! sides to the `t`-th power in big integers. Comparisons never go through the float.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn int(x: i128) -> BigInt {
    BigInt::from(x)
}

/// Compares `k * x^(1/t)` with `y`, where `x >= 0`.
pub fn cmp_root_term(k: &BigInt, x: &BigRational, t: u32, y: &BigInt) -> Ordering {
    assert!(t >= 1 && !x.is_negative());
    if k.is_zero() || x.is_zero() {
        return BigInt::zero().cmp(y);
    }
    let pow_t = |v: &BigInt| -> BigRational { BigRational::from_integer(Pow::pow(v, t)) };
    match k.sign() {
        Sign::Plus => {
            if y.sign() != Sign::Plus {
                return Ordering::Greater;
            }
            (pow_t(k) * x).cmp(&pow_t(y))
        }
        _ => {
            if y.sign() != Sign::Minus {
                return Ordering::Less;
            }
            pow_t(&-y).cmp(&(pow_t(&-k) * x))
        }
    }
}

/// `(s-1)^(1/t) (n-t+1) m^(1-1/t) + (t-1) m`, an upper bound on `z(m, n; s, t)`.
pub fn zarankiewicz_bound(m: u64, n: u64, s: u64, t: u64) -> f64 {
    let (m, n, s, t) = (m as f64, n as f64, s as f64, t as f64);
    (s - 1.0).powf(1.0 / t) * (n - t + 1.0) * m.powf(1.0 - 1.0 / t) + (t - 1.0) * m
}

/// Exact test of `edges < zarankiewicz_bound(m, n, s, t)`.
pub fn zarankiewicz_bound_exceeds(m: u64, n: u64, s: u64, t: u64, edges: u64) -> bool {
    assert!(t >= 1 && s >= 1);
    let t32 = t as u32;
    let radicand = BigRational::from_integer(BigInt::from(s - 1) * Pow::pow(BigInt::from(m), t32 - 1));
    let coef = int(n as i128 - t as i128 + 1);
    let lhs = int(edges as i128 - (t as i128 - 1) * m as i128);
    cmp_root_term(&coef, &radicand, t32, &lhs) == Ordering::Greater
}

/// `(m/(s-1))^(1/t) (k-t+1)`: a `K_{s,t}`-free graph with `m` rows of degree at least `k`
/// has strictly more columns than this.
pub fn size_bound_rhs(m: u64, k: u64, s: u64, t: u64) -> f64 {
    (m as f64 / (s as f64 - 1.0)).powf(1.0 / t as f64) * (k as f64 - t as f64 + 1.0)
}

/// Exact test of `columns > size_bound_rhs(m, k, s, t)`.
pub fn size_bound_satisfied(m: u64, k: u64, s: u64, t: u64, columns: u64) -> bool {
    assert!(s >= 2 && t >= 1);
    let x = BigRational::new(BigInt::from(m), BigInt::from(s - 1));
    let coef = int(k as i128 - t as i128 + 1);
    cmp_root_term(&coef, &x, t as u32, &int(columns as i128)) == Ordering::Less
}

/// Whether `(m/(s-1))^(1/t) (d-t+1) > n`, the hypothesis under which fewer than `m r`
/// vertices per side have `d` or more edges of one color.
pub fn check_lemma_condition(m: u64, d: u64, n: u64, s: u64, t: u64) -> bool {
    assert!(s >= 2 && t >= 1);
    let x = BigRational::new(BigInt::from(m), BigInt::from(s - 1));
    let coef = int(d as i128 - t as i128 + 1);
    cmp_root_term(&coef, &x, t as u32, &int(n as i128)) == Ordering::Greater
}

/// Big-integer version of [`check_lemma_condition`] for the main-theorem parameters.
pub fn check_lemma_condition_big(m: &BigUint, d: &BigUint, n: &BigUint, s: u64, t: u64) -> bool {
    assert!(s >= 2 && t >= 1);
    let x = BigRational::new(BigInt::from(m.clone()), BigInt::from(s - 1));
    let coef = BigInt::from(d.clone()) - BigInt::from(t) + 1;
    cmp_root_term(&coef, &x, t as u32, &BigInt::from(n.clone())) == Ordering::Greater
}

fn check_st(s: u64, t: u64, r: u64) -> Result<()> {
    if s < 2 || t < 1 || r < 1 {
        return Err(Error::InvalidArgument(format!(
            "need s >= 2, t >= 1, r >= 1 (got s={s}, t={t}, r={r})"
        )));
    }
    Ok(())
}

/// `s^(2t) t^(2t)`, shared by the main-theorem constants.
fn st_power(s: u64, t: u64, exp: u64) -> BigUint {
    Pow::pow(big(s), exp) * Pow::pow(big(t), exp)
}

/// Side length `n = 3(s-1) s^(2t) t^(2t) r` from the proof of the linear `K_{s,t}` bound.
pub fn main_theorem_n(s: u64, t: u64, r: u64) -> Result<BigUint> {
    check_st(s, t, r)?;
    Ok(big(3) * big(s - 1) * st_power(s, t, 2 * t) * big(r))
}

/// `(m, d)` with `m = (s-1) s^(2t) t^(2t)` and `d = 4(s-1) s^(2(t-1)) t^(2(t-1)) r`.
pub fn main_theorem_md(s: u64, t: u64, r: u64) -> Result<(BigUint, BigUint)> {
    check_st(s, t, r)?;
    let m = big(s - 1) * st_power(s, t, 2 * t);
    let d = big(4) * big(s - 1) * st_power(s, t, 2 * (t - 1)) * big(r);
    Ok((m, d))
}

/// The proof's constant `C_{s,t} = 3(s-1) s^(2t) t^(2t)`, so that `n = C_{s,t} r`.
pub fn main_theorem_constant(s: u64, t: u64) -> Result<BigUint> {
    main_theorem_n(s, t, 1)
}

/// Union bound on a repeated color among `s t` sampled edges, computed two ways:
/// `C(st, 2) d / (n - m r)` from the main-theorem parameters, and the closed form
/// `2 C(st, 2) / (s^2 t^2)`.
pub fn union_bound(s: u64, t: u64, r: u64) -> Result<(BigRational, BigRational)> {
    let n = main_theorem_n(s, t, r)?;
    let (m, d) = main_theorem_md(s, t, r)?;
    let pairs = binomial(big(s * t), big(2));
    let denom = BigInt::from(n) - BigInt::from(m * big(r));
    let via_params = BigRational::new(BigInt::from(pairs.clone() * d), denom);
    let closed = BigRational::new(BigInt::from(big(2) * pairs), BigInt::from(s * s * t * t));
    Ok((via_params, closed))
}

/// `(p-1)(q-1) + 1`: every coloring of `K_{1,n}` at this size has a rainbow `K_{1,p}`
/// or a monochromatic `K_{1,q}`.
pub fn star_bound(p: u64, q: u64) -> Result<u64> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument("need p, q >= 1".into()));
    }
    Ok((p - 1) * (q - 1) + 1)
}

fn check_tr(t: u64, r: u64) -> Result<()> {
    if t < 2 || r < 1 {
        return Err(Error::InvalidArgument(format!("need t >= 2, r >= 1 (got t={t}, r={r})")));
    }
    Ok(())
}

/// `(n1, n2)` forcing a monochromatic or rainbow `K_{2,t}` in every `r`-coloring:
/// `n1 = (6(t-1)-1) r + 2`, `n2 = 2(t-1) C(6(t-1), 2) + 3(t-1)(r+1) + 1`.
pub fn k2t_sizes(t: u64, r: u64) -> Result<(BigUint, BigUint)> {
    check_tr(t, r)?;
    let n1 = big(6 * (t - 1) - 1) * big(r) + big(2);
    let n2 = big(2 * (t - 1)) * binomial(big(6 * (t - 1)), big(2)) + big(3 * (t - 1) * (r + 1) + 1);
    Ok((n1, n2))
}

/// Side length `(t-1) r` of the block coloring that avoids both patterns.
pub fn lower_bound_size(t: u64, r: u64) -> Result<u64> {
    check_tr(t, r)?;
    Ok((t - 1) * r)
}

/// `(n2 - (t-1)(r+1)) / (4(t-1))`: in an `r`-coloring of `K_{n1,n2}` without monochromatic or
/// rainbow `K_{2,t}`, one row of every pair has this many edges of a single color.
pub fn color_degree_threshold(n2: u64, t: u64, r: u64) -> Result<BigRational> {
    check_tr(t, r)?;
    Ok(BigRational::new(
        int(n2 as i128 - ((t - 1) * (r + 1)) as i128),
        int(4 * (t as i128 - 1)),
    ))
}

/// Configurations whose Euclidean Gallai-Ramsey dimension has a closed form here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EuclidKind {
    /// Regular simplices `Delta_p` and `Delta_q`: dimension `pq + 2`.
    SimplexPair { p: u64, q: u64 },
    /// Segment times a regular `(t-1)`-simplex.
    Prism { t: u64, r: u64 },
    /// Product of regular `(s-1)`- and `(t-1)`-simplices: `2 C_{s,t} r`.
    Product { s: u64, t: u64, r: u64 },
}

impl EuclidKind {
    /// Builds a kind from its name and positional parameters `(p,q)`, `(t,r)` or `(s,t,r)`.
    pub fn from_name(name: &str, params: &[u64]) -> Result<Self> {
        let arity = |n: usize| -> Result<()> {
            if params.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "{name} takes {n} parameters, got {}",
                    params.len()
                )));
            }
            Ok(())
        };
        match name.parse::<EuclidKindName>()? {
            EuclidKindName::SimplexPair => {
                arity(2)?;
                Ok(EuclidKind::SimplexPair {
                    p: params[0],
                    q: params[1],
                })
            }
            EuclidKindName::Prism => {
                arity(2)?;
                Ok(EuclidKind::Prism {
                    t: params[0],
                    r: params[1],
                })
            }
            EuclidKindName::Product => {
                arity(3)?;
                Ok(EuclidKind::Product {
                    s: params[0],
                    t: params[1],
                    r: params[2],
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EuclidKindName {
    SimplexPair,
    Prism,
    Product,
}

impl FromStr for EuclidKindName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simplex_pair" | "simplex-pair" => Ok(Self::SimplexPair),
            "prism" => Ok(Self::Prism),
            "product" => Ok(Self::Product),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// Ambient dimension guaranteed by the corresponding Euclidean theorem.
pub fn euclid_dims(kind: EuclidKind) -> Result<BigUint> {
    match kind {
        EuclidKind::SimplexPair { p, q } => Ok(big(p) * big(q) + big(2)),
        EuclidKind::Prism { t, r } => {
            check_tr(t, r)?;
            let tm = t - 1;
            Ok(big((6 * tm - 1) * r)
                + big(3 * tm * (r + 1))
                + big(2 * tm) * binomial(big(6 * tm), big(2))
                + big(3))
        }
        EuclidKind::Product { s, t, r } => Ok(big(2) * main_theorem_n(s, t, r)?),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    Zarankiewicz,
    SizeBound,
    LemmaCondition,
    MainN,
    MainMd,
    UnionBound,
    Star,
    K2t,
    LowerBound,
    EuclidDims,
}

impl FormulaId {
    pub const ALL: [FormulaId; 10] = [
        FormulaId::Zarankiewicz,
        FormulaId::SizeBound,
        FormulaId::LemmaCondition,
        FormulaId::MainN,
        FormulaId::MainMd,
        FormulaId::UnionBound,
        FormulaId::Star,
        FormulaId::K2t,
        FormulaId::LowerBound,
        FormulaId::EuclidDims,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FormulaId::Zarankiewicz => "zarankiewicz",
            FormulaId::SizeBound => "size-bound",
            FormulaId::LemmaCondition => "lemma-condition",
            FormulaId::MainN => "main-n",
            FormulaId::MainMd => "main-md",
            FormulaId::UnionBound => "union-bound",
            FormulaId::Star => "star",
            FormulaId::K2t => "k2t",
            FormulaId::LowerBound => "lower-bound",
            FormulaId::EuclidDims => "euclid-dims",
        }
    }

    /// Parameter names, in the order they are read.
    pub fn params(&self) -> &'static [&'static str] {
        match self {
            FormulaId::Zarankiewicz => &["m", "n", "s", "t"],
            FormulaId::SizeBound => &["m", "k", "s", "t"],
            FormulaId::LemmaCondition => &["m", "d", "n", "s", "t"],
            FormulaId::MainN | FormulaId::MainMd | FormulaId::UnionBound => &["s", "t", "r"],
            FormulaId::Star => &["p", "q"],
            FormulaId::K2t | FormulaId::LowerBound => &["t", "r"],
            FormulaId::EuclidDims => &[],
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// One evaluated quantity. Integers serialize as decimal strings so they survive any size.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Integer(BigUint),
    Real(f64),
    Bool(bool),
    Rational(BigRational),
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Integer(v) => write!(f, "{v}"),
            BoundValue::Real(v) => write!(f, "{v}"),
            BoundValue::Bool(v) => write!(f, "{v}"),
            BoundValue::Rational(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawValue {
    Bool(bool),
    Real(f64),
    Text(String),
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BoundValue::Integer(v) => RawValue::Text(v.to_string()),
            BoundValue::Real(v) => RawValue::Real(*v),
            BoundValue::Bool(v) => RawValue::Bool(*v),
            BoundValue::Rational(v) => RawValue::Text(v.to_string()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoundValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        Ok(match RawValue::deserialize(deserializer)? {
            RawValue::Bool(v) => BoundValue::Bool(v),
            RawValue::Real(v) => BoundValue::Real(v),
            RawValue::Text(text) => {
                if text.contains('/') {
                    BoundValue::Rational(text.parse().map_err(|_| D::Error::custom("bad rational"))?)
                } else {
                    BoundValue::Integer(text.parse().map_err(|_| D::Error::custom("bad integer"))?)
                }
            }
        })
    }
}

/// Evaluated bound: which formula, from which inputs, with which results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub formula_id: FormulaId,
    pub inputs: BTreeMap<String, u64>,
    /// Named results in display order.
    pub values: Vec<(String, BoundValue)>,
    /// Whether the bound is a strict inequality rather than attained.
    pub strict: bool,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundValue> {
        self.values.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    /// `name=value` pairs separated by spaces.
    pub fn to_text(&self) -> String {
        self.values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

/// Evaluates `id` on named inputs; `euclid-dims` additionally takes its kind by name.
pub fn evaluate(id: FormulaId, inputs: &BTreeMap<String, u64>, euclid_kind: Option<&str>) -> Result<BoundReport> {
    let get = |name: &str| -> Result<u64> {
        inputs
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("{id} needs --{name}")))
    };
    let mut used: BTreeMap<String, u64> = BTreeMap::new();
    for name in id.params() {
        used.insert(name.to_string(), get(name)?);
    }
    let v = |name: &str| used[name];
    let (values, strict) = match id {
        FormulaId::Zarankiewicz => (
            vec![(
                "bound".to_string(),
                BoundValue::Real(zarankiewicz_bound(v("m"), v("n"), v("s"), v("t"))),
            )],
            true,
        ),
        FormulaId::SizeBound => {
            if v("s") < 2 {
                return Err(Error::InvalidArgument("size-bound needs s >= 2".into()));
            }
            (
                vec![(
                    "rhs".to_string(),
                    BoundValue::Real(size_bound_rhs(v("m"), v("k"), v("s"), v("t"))),
                )],
                true,
            )
        }
        FormulaId::LemmaCondition => {
            if v("s") < 2 {
                return Err(Error::InvalidArgument("lemma-condition needs s >= 2".into()));
            }
            let holds = check_lemma_condition(v("m"), v("d"), v("n"), v("s"), v("t"));
            let lhs = size_bound_rhs(v("m"), v("d"), v("s"), v("t"));
            (
                vec![
                    ("lhs".to_string(), BoundValue::Real(lhs)),
                    ("holds".to_string(), BoundValue::Bool(holds)),
                ],
                true,
            )
        }
        FormulaId::MainN => (
            vec![("n".to_string(), BoundValue::Integer(main_theorem_n(v("s"), v("t"), v("r"))?))],
            false,
        ),
        FormulaId::MainMd => {
            let (m, d) = main_theorem_md(v("s"), v("t"), v("r"))?;
            (
                vec![
                    ("m".to_string(), BoundValue::Integer(m)),
                    ("d".to_string(), BoundValue::Integer(d)),
                ],
                false,
            )
        }
        FormulaId::UnionBound => {
            let (via_params, closed) = union_bound(v("s"), v("t"), v("r"))?;
            let below_one = closed < BigRational::one();
            (
                vec![
                    ("probability".to_string(), BoundValue::Rational(via_params)),
                    ("closed_form".to_string(), BoundValue::Rational(closed)),
                    ("below_one".to_string(), BoundValue::Bool(below_one)),
                ],
                true,
            )
        }
        FormulaId::Star => (
            vec![("n".to_string(), BoundValue::Integer(big(star_bound(v("p"), v("q"))?)))],
            false,
        ),
        FormulaId::K2t => {
            let (n1, n2) = k2t_sizes(v("t"), v("r"))?;
            (
                vec![
                    ("n1".to_string(), BoundValue::Integer(n1)),
                    ("n2".to_string(), BoundValue::Integer(n2)),
                ],
                false,
            )
        }
        FormulaId::LowerBound => (
            vec![(
                "n".to_string(),
                BoundValue::Integer(big(lower_bound_size(v("t"), v("r"))?)),
            )],
            false,
        ),
        FormulaId::EuclidDims => {
            let name = euclid_kind.ok_or_else(|| Error::InvalidArgument("euclid-dims needs --kind".into()))?;
            let names: &[&str] = match name.parse::<EuclidKindName>()? {
                EuclidKindName::SimplexPair => &["p", "q"],
                EuclidKindName::Prism => &["t", "r"],
                EuclidKindName::Product => &["s", "t", "r"],
            };
            let mut params = Vec::new();
            for n in names {
                let x = get(n)?;
                used.insert(n.to_string(), x);
                params.push(x);
            }
            let dim = euclid_dims(EuclidKind::from_name(name, &params)?)?;
            (vec![("d".to_string(), BoundValue::Integer(dim))], false)
        }
    };
    Ok(BoundReport {
        formula_id: id,
        inputs: used,
        values,
        strict,
    })
}

/// `f64` view of a report value, when it has one.
pub fn as_f64(value: &BoundValue) -> Option<f64> {
    match value {
        BoundValue::Integer(v) => v.to_f64(),
        BoundValue::Real(v) => Some(*v),
        BoundValue::Rational(v) => v.to_f64(),
        BoundValue::Bool(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zarankiewicz_examples() {
        assert_eq!(zarankiewicz_bound(4, 4, 2, 2), 10.0);
        assert_eq!(zarankiewicz_bound(3, 7, 2, 1), 7.0);
        assert!((zarankiewicz_bound(3, 3, 2, 2) - (2.0 * 3f64.sqrt() + 3.0)).abs() < 1e-12);
        // 9 < 10 strictly, 10 is not below 10
        assert!(zarankiewicz_bound_exceeds(4, 4, 2, 2, 9));
        assert!(!zarankiewicz_bound_exceeds(4, 4, 2, 2, 10));
        // 6 < 6.464..., 7 is not
        assert!(zarankiewicz_bound_exceeds(3, 3, 2, 2, 6));
        assert!(!zarankiewicz_bound_exceeds(3, 3, 2, 2, 7));
    }

    #[test]
    fn size_bound_examples() {
        assert_eq!(size_bound_rhs(4, 3, 2, 2), 4.0);
        assert_eq!(size_bound_rhs(9, 2, 2, 2), 3.0);
        assert_eq!(size_bound_rhs(256, 64, 2, 2), 1008.0);
        assert!(size_bound_satisfied(4, 3, 2, 2, 5));
        assert!(!size_bound_satisfied(4, 3, 2, 2, 4));
    }

    #[test]
    fn lemma_condition_examples() {
        assert!(check_lemma_condition(256, 64, 768, 2, 2));
        assert!(!check_lemma_condition(1, 3, 1_000_000, 2, 3));
        assert!(!check_lemma_condition(4, 3, 4, 2, 2));
        assert!(check_lemma_condition(4, 3, 3, 2, 2));
    }

    #[test]
    fn cmp_root_term_signs() {
        let x = BigRational::from_integer(int(2));
        assert_eq!(cmp_root_term(&int(-1), &x, 2, &int(0)), Ordering::Less);
        assert_eq!(cmp_root_term(&int(1), &x, 2, &int(-5)), Ordering::Greater);
        // -sqrt(2) vs -1 and -2
        assert_eq!(cmp_root_term(&int(-1), &x, 2, &int(-1)), Ordering::Less);
        assert_eq!(cmp_root_term(&int(-1), &x, 2, &int(-2)), Ordering::Greater);
        assert_eq!(cmp_root_term(&int(0), &x, 2, &int(0)), Ordering::Equal);
        // 2 * 8^(1/3) = 4
        let eight = BigRational::from_integer(int(8));
        assert_eq!(cmp_root_term(&int(2), &eight, 3, &int(4)), Ordering::Equal);
    }

    #[test]
    fn main_theorem_examples() {
        assert_eq!(main_theorem_n(2, 2, 1).unwrap(), big(768));
        assert_eq!(main_theorem_md(2, 2, 1).unwrap(), (big(256), big(64)));
        assert_eq!(main_theorem_n(2, 2, 5).unwrap(), big(768 * 5));
        assert_eq!(main_theorem_n(3, 2, 1).unwrap(), big(7776));
        assert!(main_theorem_n(1, 2, 1).is_err());
    }

    #[test]
    fn union_bound_routes_agree() {
        let (a, b) = union_bound(2, 2, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, BigRational::new(int(3), int(4)));
    }

    #[test]
    fn small_formulas() {
        assert_eq!(star_bound(2, 2).unwrap(), 2);
        assert_eq!(star_bound(1, 9).unwrap(), 1);
        assert_eq!(star_bound(3, 4).unwrap(), 7);
        assert_eq!(k2t_sizes(2, 1).unwrap(), (big(7), big(37)));
        assert_eq!(k2t_sizes(2, 2).unwrap(), (big(12), big(40)));
        assert_eq!(k2t_sizes(3, 1).unwrap(), (big(13), big(277)));
        assert!(k2t_sizes(1, 1).is_err());
        assert_eq!(lower_bound_size(2, 3).unwrap(), 3);
        assert_eq!(lower_bound_size(2, 1).unwrap(), 1);
        assert_eq!(lower_bound_size(4, 2).unwrap(), 6);
    }

    #[test]
    fn euclid_examples() {
        assert_eq!(euclid_dims(EuclidKind::SimplexPair { p: 1, q: 1 }).unwrap(), big(3));
        assert_eq!(euclid_dims(EuclidKind::Prism { t: 2, r: 1 }).unwrap(), big(44));
        assert_eq!(euclid_dims(EuclidKind::Prism { t: 2, r: 3 }).unwrap(), big(60));
        assert_eq!(
            euclid_dims(EuclidKind::Product { s: 2, t: 2, r: 1 }).unwrap(),
            big(1536)
        );
        assert!(matches!(
            EuclidKind::from_name("cube", &[1, 2]),
            Err(Error::UnknownKind(_))
        ));
        assert!(EuclidKind::from_name("prism", &[1]).is_err());
    }

    #[test]
    fn threshold_value() {
        assert_eq!(
            color_degree_threshold(37, 2, 1).unwrap(),
            BigRational::new(int(35), int(4))
        );
    }

    #[test]
    fn report_text_and_json() {
        let inputs: BTreeMap<String, u64> = [("t".to_string(), 2), ("r".to_string(), 1)].into();
        let report = evaluate(FormulaId::K2t, &inputs, None).unwrap();
        assert_eq!(report.to_text(), "n1=7 n2=37");
        assert_eq!(BoundReport::from_json(&report.to_json()).unwrap(), report);

        let inputs: BTreeMap<String, u64> = [("s", 2), ("t", 2), ("r", 1)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let report = evaluate(FormulaId::UnionBound, &inputs, None).unwrap();
        assert_eq!(report.get("below_one"), Some(&BoundValue::Bool(true)));
        assert_eq!(BoundReport::from_json(&report.to_json()).unwrap(), report);

        assert!(evaluate(FormulaId::Star, &BTreeMap::new(), None).is_err());
        assert!("nope".parse::<FormulaId>().is_err());
    }
}
