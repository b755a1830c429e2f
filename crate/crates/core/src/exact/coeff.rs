use std::fmt::Debug;

/// Coefficient ring of Hecke algebra elements and matrices.
///
/// Constants are produced from an existing element (`zero_like`, ...) so that
/// context-carrying types such as [`CycloNum`](super::CycloNum) need no global
/// state.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;
    /// The semilinear twist `q ↦ q^{-1}` (complex conjugation on specialised values).
    fn bar(&self) -> Self;

    fn is_one(&self) -> bool {
        self.sub_ref(&self.one_like()).is_zero()
    }

    /// Integer power; negative exponents need an invertible base.
    fn pow_i64(&self, k: i64) -> Self {
        let base = if k < 0 {
            self.try_inv().expect("negative power of a non-unit")
        } else {
            self.clone()
        };
        let mut acc = self.one_like();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        acc
    }
}

/// A [`Coeff`] in which every nonzero element is invertible.
pub trait Field: Coeff {
    fn inv(&self) -> Self {
        self.try_inv().expect("division by zero")
    }

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv())
    }
}
