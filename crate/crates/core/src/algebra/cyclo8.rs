//! Exact arithmetic in the cyclotomic field Q(z), z = exp(i*pi/4).
//!
//! Elements are stored in the power basis `a0 + a1 z + a2 z^2 + a3 z^3`,
//! reduced with `z^4 = -1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo8 {
    c: [BigRational; 4],
}

fn rz() -> BigRational {
    BigRational::zero()
}

impl Cyclo8 {
    pub fn new(c: [BigRational; 4]) -> Self {
        Cyclo8 { c }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclo8 { c: [r, rz(), rz(), rz()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(k: i32) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [rz(), rz(), rz(), rz()];
        if k < 4 {
            c[k] = BigRational::one();
        } else {
            c[k - 4] = -BigRational::one();
        }
        Cyclo8 { c }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Galois automorphism `z -> z^k` for odd `k`.
    pub fn galois(&self, k: usize) -> Self {
        debug_assert!(k % 2 == 1);
        let mut out = [rz(), rz(), rz(), rz()];
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = (j * k) % 8;
            if e < 4 {
                out[e] += a;
            } else {
                out[e - 4] -= a;
            }
        }
        Cyclo8 { c: out }
    }

    /// Complex conjugation, `z -> z^7`.
    pub fn conj(&self) -> Self {
        self.galois(7)
    }

    /// Field norm down to Q: the product of all four conjugates.
    pub fn norm(&self) -> BigRational {
        let p = self * &self.galois(3) * self.galois(5) * self.galois(7);
        debug_assert!(p.c[1..].iter().all(Zero::is_zero));
        p.c[0].clone()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let adj = self.galois(3) * self.galois(5) * self.galois(7);
        let n = (self * &adj).c[0].clone();
        Ok(adj.scale(&n.recip()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo8 {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut out = Complex64::new(0.0, 0.0);
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let v = a.to_f64().unwrap_or(f64::NAN);
            out += Complex64::from_polar(v, std::f64::consts::FRAC_PI_4 * j as f64);
        }
        out
    }

    /// Nonzero `(power, coefficient)` pairs, ascending in the power of `z`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.c.iter().enumerate().filter(|(_, a)| !a.is_zero())
    }

    /// Parse a literal such as `3/2`, `-z^3`, `1/2+1/2*z^2`.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let bad = || AlgebraError::BadLiteral(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut out = Cyclo8::zero();
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coef = BigRational::one();
            let mut power = 0i32;
            for factor in body.split('*') {
                let factor = factor.trim_start_matches('(').trim_end_matches(')');
                if let Some(rest) = factor.strip_prefix('z') {
                    let p = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<i32>().ok())
                            .ok_or_else(bad)?
                    };
                    power += p;
                } else {
                    coef *= parse_rational(factor).ok_or_else(bad)?;
                }
            }
            if neg {
                coef = -coef;
            }
            out = out + Cyclo8::zeta_pow(power).scale(&coef);
        }
        Ok(out)
    }

    /// Compact literal form, e.g. `1/2+1/2*z^2`; inverse of [`Cyclo8::parse`].
    pub fn literal(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, a) in self.terms() {
            let neg = a.is_negative();
            let mag = a.abs();
            if !s.is_empty() || neg {
                s.push(if neg { '-' } else { '+' });
            }
            let zf = zeta_factor(k);
            match (zf, mag.is_one()) {
                (None, _) => s.push_str(&fmt_rational(&mag)),
                (Some(z), true) => s.push_str(&z),
                (Some(z), false) => {
                    s.push_str(&fmt_rational(&mag));
                    s.push('*');
                    s.push_str(&z);
                }
            }
        }
        s
    }
}

pub(crate) fn zeta_factor(k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some("z".into()),
        _ => Some(format!("z^{k}")),
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let mut parts = s.splitn(2, '/');
    let n: BigInt = parts.next()?.parse().ok()?;
    let d: BigInt = match parts.next() {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl fmt::Display for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl Zero for Cyclo8 {
    fn zero() -> Self {
        Cyclo8 { c: [rz(), rz(), rz(), rz()] }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for Cyclo8 {
    fn one() -> Self {
        Cyclo8::from_int(1)
    }
}

impl<'a> Add<&'a Cyclo8> for &'a Cyclo8 {
    type Output = Cyclo8;
    fn add(self, o: &Cyclo8) -> Cyclo8 {
        Cyclo8 {
            c: [
                &self.c[0] + &o.c[0],
                &self.c[1] + &o.c[1],
                &self.c[2] + &o.c[2],
                &self.c[3] + &o.c[3],
            ],
        }
    }
}

impl<'a> Sub<&'a Cyclo8> for &'a Cyclo8 {
    type Output = Cyclo8;
    fn sub(self, o: &Cyclo8) -> Cyclo8 {
        Cyclo8 {
            c: [
                &self.c[0] - &o.c[0],
                &self.c[1] - &o.c[1],
                &self.c[2] - &o.c[2],
                &self.c[3] - &o.c[3],
            ],
        }
    }
}

impl<'a> Mul<&'a Cyclo8> for &'a Cyclo8 {
    type Output = Cyclo8;
    fn mul(self, o: &Cyclo8) -> Cyclo8 {
        let mut out = [rz(), rz(), rz(), rz()];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                let k = i + j;
                if k < 4 {
                    out[k] += p;
                } else {
                    out[k - 4] -= p;
                }
            }
        }
        Cyclo8 { c: out }
    }
}

impl Neg for Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        let [a, b, c, d] = self.c;
        Cyclo8 { c: [-a, -b, -c, -d] }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Cyclo8 {
            type Output = Cyclo8;
            fn $m(self, o: Cyclo8) -> Cyclo8 { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Cyclo8> for Cyclo8 {
            type Output = Cyclo8;
            fn $m(self, o: &Cyclo8) -> Cyclo8 { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);
