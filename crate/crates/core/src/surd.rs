//! Exact arithmetic in `Q(√d)`.
//!
//! Eigenvalues of conference-type parameter sets are `(a ± √D)/2` with `D`
//! not a square, so every quantity derived from them lives in `Q(√D)`.
//! Values are kept as `a + b√d` with rational `a`, `b`; signs and
//! comparisons are decided exactly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i128>;

/// `a + b·√d` with `d > 0`. Rational values use `b = 0`, `d = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    a: Q,
    b: Q,
    d: i128,
}

/// Exact integer square root, if `x` is a perfect square.
pub fn exact_sqrt(x: i128) -> Option<i128> {
    if x < 0 {
        return None;
    }
    let r = x.sqrt();
    (r * r == x).then_some(r)
}

impl Surd {
    pub fn int(x: i128) -> Surd {
        Surd::rational(Q::from_integer(x))
    }

    pub fn rational(a: Q) -> Surd {
        Surd { a, b: Q::zero(), d: 1 }
    }

    /// `a + b·√d`, collapsing to a rational when `d` is a square.
    pub fn new(a: Q, b: Q, d: i128) -> Surd {
        assert!(d > 0, "radicand must be positive");
        match exact_sqrt(d) {
            Some(r) => Surd::rational(a + b * Q::from_integer(r)),
            None if b.is_zero() => Surd::rational(a),
            None => Surd { a, b, d },
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.is_rational().then_some(self.a)
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn to_f64(&self) -> f64 {
        let q = |x: Q| *x.numer() as f64 / *x.denom() as f64;
        q(self.a) + q(self.b) * (self.d as f64).sqrt()
    }

    /// Exact sign.
    pub fn signum(&self) -> i32 {
        let sa = sign(self.a);
        let sb = sign(self.b);
        if sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        if sa == 0 {
            return sb;
        }
        // Opposite signs: compare a² with b²d.
        let lhs = self.a * self.a;
        let rhs = self.b * self.b * Q::from_integer(self.d);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> i128 {
        let mut f = self.to_f64().floor() as i128;
        while (*self - Surd::int(f)).signum() < 0 {
            f -= 1;
        }
        while (*self - Surd::int(f + 1)).signum() >= 0 {
            f += 1;
        }
        f
    }

    fn radicand(x: &Surd, y: &Surd) -> i128 {
        match (x.is_rational(), y.is_rational()) {
            (true, _) => y.d,
            (_, true) => x.d,
            _ => {
                assert_eq!(x.d, y.d, "mixing different quadratic fields");
                x.d
            }
        }
    }

    pub fn recip(&self) -> Surd {
        // 1/(a + b√d) = (a - b√d)/(a² - b²d)
        let norm = self.a * self.a - self.b * self.b * Q::from_integer(self.d);
        assert!(!norm.is_zero(), "division by zero");
        Surd::new(self.a / norm, -self.b / norm, self.d)
    }
}

fn sign(q: Q) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        let d = Surd::radicand(&self, &o);
        Surd::new(self.a + o.a, self.b + o.b, d)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let d = Surd::radicand(&self, &o);
        let dq = Q::from_integer(d);
        Surd::new(self.a * o.a + self.b * o.b * dq, self.a * o.b + self.b * o.a, d)
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, o: &Surd) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Surd {
    fn cmp(&self, o: &Surd) -> Ordering {
        (*self - *o).signum().cmp(&0)
    }
}

impl From<i128> for Surd {
    fn from(x: i128) -> Surd {
        Surd::int(x)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        // Print as (p ± q√d)/r over a common denominator.
        let den = num_integer::lcm(*self.a.denom(), *self.b.denom());
        let p = *self.a.numer() * (den / self.a.denom());
        let q = *self.b.numer() * (den / self.b.denom());
        let sign = if q < 0 { '-' } else { '+' };
        let body = match q.abs() {
            1 => format!("√{}", self.d),
            x => format!("{x}√{}", self.d),
        };
        if den == 1 {
            write!(f, "{p}{sign}{body}")
        } else {
            write!(f, "({p}{sign}{body})/{den}")
        }
    }
}
