//! Named semigroup families.

use super::{AlgebraError, Element, FiniteSemigroup};

/// A named construction with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Standard {
    Trivial,
    LeftZero(usize),
    RightZero(usize),
    RectangularBand(usize, usize),
    CyclicGroup(usize),
    ChainSemilattice(usize),
    NullSemigroup(usize),
    /// Rees matrix semigroup over the trivial group with a `Λ × I` sandwich
    /// matrix, plus zero.
    ReesMatrix0(Vec<Vec<bool>>),
    AdjoinIdentity(Box<Standard>),
    AdjoinZero(Box<Standard>),
    A21,
}

impl Standard {
    pub fn build(&self) -> Result<FiniteSemigroup, AlgebraError> {
        match self {
            Standard::Trivial => Ok(trivial()),
            Standard::LeftZero(n) => left_zero(*n),
            Standard::RightZero(n) => right_zero(*n),
            Standard::RectangularBand(m, n) => rectangular_band(*m, *n),
            Standard::CyclicGroup(n) => cyclic_group(*n),
            Standard::ChainSemilattice(n) => chain_semilattice(*n),
            Standard::NullSemigroup(n) => null_semigroup(*n),
            Standard::ReesMatrix0(p) => rees_matrix_0(p),
            Standard::AdjoinIdentity(inner) => Ok(adjoin_identity(&inner.build()?)),
            Standard::AdjoinZero(inner) => Ok(adjoin_zero(&inner.build()?)),
            Standard::A21 => Ok(a21()),
        }
    }
}

fn positive(n: usize, what: &str) -> Result<(), AlgebraError> {
    if n == 0 {
        Err(AlgebraError::InvalidParams(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

fn build(order: usize, f: impl Fn(Element, Element) -> Element, name: String) -> FiniteSemigroup {
    let table = (0..order * order).map(|idx| f(idx / order, idx % order)).collect();
    FiniteSemigroup::from_parts_unchecked(order, table, None).with_name(name)
}

pub fn trivial() -> FiniteSemigroup {
    build(1, |_, _| 0, "trivial".into())
}

/// `xy = x`.
pub fn left_zero(n: usize) -> Result<FiniteSemigroup, AlgebraError> {
    positive(n, "order")?;
    Ok(build(n, |a, _| a, format!("left_zero({n})")))
}

/// `xy = y`.
pub fn right_zero(n: usize) -> Result<FiniteSemigroup, AlgebraError> {
    positive(n, "order")?;
    Ok(build(n, |_, b| b, format!("right_zero({n})")))
}

/// `(i, j)(k, l) = (i, l)` with `(i, j)` stored at `i * n + j`.
pub fn rectangular_band(m: usize, n: usize) -> Result<FiniteSemigroup, AlgebraError> {
    positive(m, "row count")?;
    positive(n, "column count")?;
    let s = build(m * n, |a, b| (a / n) * n + b % n, format!("rectangular_band({m},{n})"));
    let labels = (0..m * n).map(|p| format!("({},{})", p / n, p % n)).collect();
    Ok(s.with_labels(labels))
}

/// Addition modulo `n`; 0 is the identity.
pub fn cyclic_group(n: usize) -> Result<FiniteSemigroup, AlgebraError> {
    positive(n, "order")?;
    Ok(build(n, |a, b| (a + b) % n, format!("cyclic_group({n})")))
}

/// `{0 < 1 < … < n-1}` under minimum.
pub fn chain_semilattice(n: usize) -> Result<FiniteSemigroup, AlgebraError> {
    positive(n, "order")?;
    Ok(build(n, |a, b| a.min(b), format!("chain_semilattice({n})")))
}

/// Every product is 0.
pub fn null_semigroup(n: usize) -> Result<FiniteSemigroup, AlgebraError> {
    positive(n, "order")?;
    Ok(build(n, |_, _| 0, format!("null_semigroup({n})")))
}

/// `M⁰[{e}; I, Λ; P]` with `P` given as `Λ` rows of `I` entries.
///
/// `(i, λ)` is stored at `i * Λ + λ` and the zero is the last element;
/// `(i, λ)(j, μ) = (i, μ)` when `P[λ][j]` is set, zero otherwise.
pub fn rees_matrix_0(p: &[Vec<bool>]) -> Result<FiniteSemigroup, AlgebraError> {
    let lambda = p.len();
    positive(lambda, "sandwich matrix row count")?;
    let index = p[0].len();
    positive(index, "sandwich matrix column count")?;
    if p.iter().any(|row| row.len() != index) {
        return Err(AlgebraError::InvalidParams("sandwich matrix rows differ in length".into()));
    }
    let zero = index * lambda;
    let order = zero + 1;
    let s = build(
        order,
        |a, b| {
            if a == zero || b == zero {
                return zero;
            }
            let (i, l) = (a / lambda, a % lambda);
            let (j, mu) = (b / lambda, b % lambda);
            if p[l][j] {
                i * lambda + mu
            } else {
                zero
            }
        },
        "rees_matrix_0".into(),
    );
    let mut labels: Vec<String> = (0..zero).map(|x| format!("({},{})", x / lambda + 1, x % lambda + 1)).collect();
    labels.push("0".into());
    Ok(s.with_labels(labels))
}

/// Appends a new identity element at index `n`.
pub fn adjoin_identity(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    let one = n;
    let out = build(
        n + 1,
        |a, b| match (a == one, b == one) {
            (true, _) => b,
            (_, true) => a,
            _ => s.mul(a, b),
        },
        format!("{}^1", s.name().unwrap_or("S")),
    );
    let mut labels: Vec<String> = s.elements().map(|a| s.label(a)).collect();
    labels.push("1".into());
    out.with_labels(labels)
}

/// Appends a new zero element at index `n`.
pub fn adjoin_zero(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    let zero = n;
    let out = build(
        n + 1,
        |a, b| if a == zero || b == zero { zero } else { s.mul(a, b) },
        format!("{}^0", s.name().unwrap_or("S")),
    );
    let mut labels: Vec<String> = s.elements().map(|a| s.label(a)).collect();
    labels.push("0".into());
    out.with_labels(labels)
}

/// `A₂¹`: the Rees matrix semigroup with sandwich matrix `[[1,1],[1,0]]`
/// and an adjoined identity. Elements 0..4 are `(i, λ)`, 4 is the zero and
/// 5 the identity; element 3 = `(2,2)` is the only non-idempotent.
pub fn a21() -> FiniteSemigroup {
    let a2 = rees_matrix_0(&[vec![true, true], vec![true, false]]).expect("fixed parameters");
    adjoin_identity(&a2).with_name("a21")
}
