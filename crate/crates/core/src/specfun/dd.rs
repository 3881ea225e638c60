//! Double-double arithmetic for the cancellation-heavy zeta series oracle.
//!
//! A value is carried as an unevaluated sum `hi + lo` of two `f64`, giving
//! roughly 31 significant decimal digits. Only the operations needed by the
//! globally convergent Hurwitz-zeta series are provided: the binomial
//! alternating sums in that series cancel catastrophically in plain `f64`,
//! while double-double keeps enough headroom to deliver ~1e-11 absolute
//! accuracy after cancellation.

/// Double-double number: the exact sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum of two arbitrary `f64` (Knuth two-sum).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Error-free sum assuming `|a| >= |b|` (fast two-sum).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Error-free product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// ln 2 to double-double precision.
    const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319046813846299e-17,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p, e) = two_prod(self.hi, other);
        let e = e + self.lo * other;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Division by a plain `f64`, keeping double-double accuracy: the naive
    /// multiply-by-reciprocal would inject an f64-level relative error that
    /// alternating binomial sums then amplify catastrophically.
    #[inline]
    pub fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        // Exact remainder self - q1 * d.
        let (p, e) = two_prod(q1, d);
        let r = self.sub(Dd { hi: p, lo: e });
        let q2 = (r.hi + r.lo) / d;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    /// exp(self) with range reduction by ln 2 and a Taylor tail.
    pub fn exp(self) -> Dd {
        let k = (self.to_f64() / std::f64::consts::LN_2).round();
        let r = self.sub(Dd::LN2.mul_f64(k));
        // |r| <= ln2/2; Taylor series converges rapidly.
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for n in 1..=24 {
            term = term.mul(r).div_f64(n as f64);
            sum = sum.add(term);
            if term.abs() < 1e-35 * sum.abs() {
                break;
            }
        }
        let scale = (k as i32).clamp(-1022, 1023);
        let s = f64::powi(2.0, scale);
        Dd {
            hi: sum.hi * s,
            lo: sum.lo * s,
        }
    }

    /// ln(self) for positive values, by Newton iteration on exp.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut y = Dd::from_f64(self.hi.ln());
        // y_{k+1} = y_k + x * exp(-y_k) - 1, quadratic convergence.
        for _ in 0..2 {
            let e = y.neg().exp();
            y = y.add(self.mul(e)).sub(Dd::ONE);
        }
        y
    }

    /// self^p for positive self, as exp(p ln self).
    pub fn powf(self, p: f64) -> Dd {
        if self.hi == 1.0 && self.lo == 0.0 {
            return Dd::ONE;
        }
        self.ln().mul_f64(p).exp()
    }
}
