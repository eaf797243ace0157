//! The coefficient domain shared by every polynomial and matrix in the crate.
//!
//! Two backends implement [`Scalar`]: [`Cyclo8`] (exact, the 8th cyclotomic
//! field) and [`Approx`] (double-precision complex numbers). All higher-level
//! types are generic over the backend, so mixing backends is a type error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

use super::cyclo8::Cyclo8;
use super::AlgebraError;

/// Relative tolerance used by the floating backend unless configured otherwise.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Terms below this fraction of the operand scale are dropped during
/// floating-point polynomial arithmetic.
const PRUNE_EPS: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

/// Sum of the two signed angles entering a turning number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TurnAngle {
    /// Multiple of pi/2.
    QuarterTurns(i32),
    Radians(f64),
}

pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const BACKEND: Backend;

    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn inv(&self) -> Result<Self, AlgebraError>;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;
    /// `None` on the exact backend.
    fn from_complex(c: Complex64) -> Option<Self>;

    fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(self.clone() * o.inv()?)
    }

    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }

    /// `|a - b| <= tol * max(1, |a|, |b|)`; exact equality for the exact backend.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// Whether a freshly computed coefficient should be treated as zero
    /// relative to `scale`, the magnitude of the operands that produced it.
    fn is_negligible(&self, scale: f64) -> bool;

    /// `exp(i*pi*k/4)`.
    fn zeta_pow(k: i32) -> Self;

    /// `exp(i*angle/2)`; the exact backend accepts only quarter turns.
    fn half_angle_unit(angle: TurnAngle) -> Result<Self, AlgebraError>;

    /// Maps an exact value into this backend (identity or the complex embedding).
    fn from_exact(v: &Cyclo8) -> Self;

    fn parse_literal(v: &Value) -> Result<Self, AlgebraError>;
    fn to_literal(&self) -> Value;

    /// Text of one coefficient in polynomial rendering.
    fn render(&self) -> CoeffText;
}

/// A coefficient prepared for polynomial rendering: an optional sign that
/// may be pulled out of the term, and the body text.
pub struct CoeffText {
    pub negative: bool,
    /// `None` for a coefficient of absolute value one.
    pub body: Option<String>,
    /// Whether `body` needs parentheses when followed by `*`.
    pub compound: bool,
}

impl Scalar for Cyclo8 {
    const BACKEND: Backend = Backend::Exact;

    fn from_i64(n: i64) -> Self {
        Cyclo8::from_int(n)
    }
    fn from_rational(r: &BigRational) -> Self {
        Cyclo8::from_rational(r.clone())
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        Cyclo8::inv(self)
    }
    fn conj(&self) -> Self {
        Cyclo8::conj(self)
    }
    fn to_complex(&self) -> Complex64 {
        Cyclo8::to_complex(self)
    }
    fn from_complex(_: Complex64) -> Option<Self> {
        None
    }
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    fn zeta_pow(k: i32) -> Self {
        Cyclo8::zeta_pow(k)
    }
    fn half_angle_unit(angle: TurnAngle) -> Result<Self, AlgebraError> {
        match angle {
            // exp(i * k*pi/2 / 2) = z^k
            TurnAngle::QuarterTurns(k) => Ok(Cyclo8::zeta_pow(k)),
            TurnAngle::Radians(_) => Err(AlgebraError::NonAxisParallelInExactMode),
        }
    }
    fn from_exact(v: &Cyclo8) -> Self {
        v.clone()
    }
    fn parse_literal(v: &Value) -> Result<Self, AlgebraError> {
        match v {
            Value::String(s) => Cyclo8::parse(s),
            Value::Number(n) if n.is_i64() => Ok(Cyclo8::from_int(n.as_i64().unwrap())),
            Value::Object(_) => Err(AlgebraError::MixedBackend),
            other => Err(AlgebraError::BadLiteral(other.to_string())),
        }
    }
    fn to_literal(&self) -> Value {
        Value::String(self.literal())
    }
    fn render(&self) -> CoeffText {
        use super::cyclo8::{fmt_rational, zeta_factor};
        use num_traits::Signed;
        let terms: Vec<_> = self.terms().collect();
        if terms.len() == 1 {
            let (k, a) = terms[0];
            let mag = a.abs();
            let z = zeta_factor(k);
            let body = match (z, mag.is_one()) {
                (None, true) => None,
                (None, false) => Some(fmt_rational(&mag)),
                (Some(z), true) => Some(z),
                (Some(z), false) if mag.is_integer() => Some(format!("{}*{z}", fmt_rational(&mag))),
                (Some(z), false) => Some(format!("({})*{z}", fmt_rational(&mag))),
            };
            let compound = k == 0 && !mag.is_integer();
            return CoeffText { negative: a.is_negative(), body, compound };
        }
        // several powers of z: render as a parenthesised sum
        let lit = self.literal();
        let spaced = spaced_sum(&lit);
        CoeffText { negative: false, body: Some(format!("({spaced})")), compound: false }
    }
}

/// Inserts spaces around top-level `+`/`-` of a compact literal.
fn spaced_sum(lit: &str) -> String {
    let mut out = String::new();
    let mut prev: Option<char> = None;
    for (i, ch) in lit.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && prev != Some('^') {
            out.push(' ');
            out.push(ch);
            out.push(' ');
        } else {
            out.push(ch);
        }
        prev = Some(ch);
    }
    out
}

/// Double-precision complex scalar.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Approx(pub Complex64);

impl Approx {
    pub fn new(re: f64, im: f64) -> Self {
        Approx(Complex64::new(re, im))
    }
    pub fn real(re: f64) -> Self {
        Approx(Complex64::new(re, 0.0))
    }
}

impl Zero for Approx {
    fn zero() -> Self {
        Approx::default()
    }
    fn is_zero(&self) -> bool {
        self.0 == Complex64::new(0.0, 0.0)
    }
}

impl One for Approx {
    fn one() -> Self {
        Approx::real(1.0)
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx(-self.0)
    }
}

macro_rules! approx_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Approx {
            type Output = Approx;
            fn $m(self, o: Approx) -> Approx { Approx(self.0.$m(o.0)) }
        }
        impl<'a> $tr<&'a Approx> for Approx {
            type Output = Approx;
            fn $m(self, o: &Approx) -> Approx { Approx(self.0.$m(o.0)) }
        }
    )*};
}
approx_ops!(Add add, Sub sub, Mul mul);

impl Scalar for Approx {
    const BACKEND: Backend = Backend::Float;

    fn from_i64(n: i64) -> Self {
        Approx::real(n as f64)
    }
    fn from_rational(r: &BigRational) -> Self {
        Approx::real(r.to_f64().unwrap_or(f64::NAN))
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if self.0.norm() <= f64::MIN_POSITIVE {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Approx(self.0.inv()))
    }
    fn conj(&self) -> Self {
        Approx(self.0.conj())
    }
    fn to_complex(&self) -> Complex64 {
        self.0
    }
    fn from_complex(c: Complex64) -> Option<Self> {
        Some(Approx(c))
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = 1f64.max(self.0.norm()).max(other.0.norm());
        (self.0 - other.0).norm() <= tol * scale
    }
    fn is_negligible(&self, scale: f64) -> bool {
        self.0.norm() <= PRUNE_EPS * scale
    }
    fn zeta_pow(k: i32) -> Self {
        Approx(Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * k as f64))
    }
    fn half_angle_unit(angle: TurnAngle) -> Result<Self, AlgebraError> {
        Ok(match angle {
            TurnAngle::QuarterTurns(k) => Self::zeta_pow(k),
            TurnAngle::Radians(t) => Approx(Complex64::from_polar(1.0, t / 2.0)),
        })
    }
    fn from_exact(v: &Cyclo8) -> Self {
        Approx(v.to_complex())
    }
    fn parse_literal(v: &Value) -> Result<Self, AlgebraError> {
        match v {
            Value::Object(m) => {
                let get = |k: &str| m.get(k).and_then(Value::as_f64).unwrap_or(0.0);
                if !m.contains_key("re") {
                    return Err(AlgebraError::BadLiteral(v.to_string()));
                }
                Ok(Approx::new(get("re"), get("im")))
            }
            Value::Number(n) => Ok(Approx::real(n.as_f64().unwrap_or(f64::NAN))),
            Value::String(_) => Err(AlgebraError::MixedBackend),
            other => Err(AlgebraError::BadLiteral(other.to_string())),
        }
    }
    fn to_literal(&self) -> Value {
        serde_json::json!({ "re": self.0.re, "im": self.0.im })
    }
    fn render(&self) -> CoeffText {
        let Complex64 { re, im } = self.0;
        if im == 0.0 {
            let mag = re.abs();
            let body = if mag == 1.0 { None } else { Some(format!("{mag}")) };
            CoeffText { negative: re < 0.0, body, compound: false }
        } else {
            let sign = if im < 0.0 { '-' } else { '+' };
            CoeffText {
                negative: false,
                body: Some(format!("({re} {sign} {}*i)", im.abs())),
                compound: false,
            }
        }
    }
}
