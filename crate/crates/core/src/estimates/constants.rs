use crate::interval::Enclosure;

/// `√3 / √(2π)`, the coefficient of `N^{-1/2}` coming from the ratio of
/// the prefactors `1/N` at shifted arguments.
pub fn shift_coefficient(prec: u32) -> Enclosure {
    let three = Enclosure::from_int(prec, 3).sqrt();
    three / Enclosure::pi(prec).scale(2).sqrt()
}

/// `√3 / (√2 π)`, the first-order correction in the single-term estimate.
pub fn main_coefficient(prec: u32) -> Enclosure {
    let three = Enclosure::from_int(prec, 3).sqrt();
    three / (Enclosure::from_int(prec, 2).sqrt() * Enclosure::pi(prec))
}

/// `√3/(√2 π) - √3/√(2π)`, about `-0.3012`.
pub fn gap_coefficient(prec: u32) -> Enclosure {
    main_coefficient(prec) - shift_coefficient(prec)
}

pub(crate) fn sqrt6(prec: u32) -> Enclosure {
    Enclosure::from_int(prec, 6).sqrt()
}

/// `k / N` for an integer numerator.
pub(crate) fn over(prec: u32, num: i64, den: u64, x: &Enclosure) -> Enclosure {
    Enclosure::ratio(prec, num, den as i64) / x
}
