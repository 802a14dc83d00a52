use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};

use super::{Domain, Evaluator, InequalityCase, Lattice, RealInterval, Sides};
use crate::interval::Enclosure;
use crate::rademacher::{bessel_tail_sum, error_bessels_bound, h_error};
use crate::special::bessel_i32_closed;

fn f(prec: u32, v: f64) -> Float {
    Float::with_val(prec, v)
}

fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

fn sqrt(x: Float) -> Float {
    x.sqrt()
}

fn sides(left: Float, right: Float) -> Sides {
    Sides { left, right }
}

/// `√3/√(2π)`.
fn c1(prec: u32) -> Float {
    sqrt(f(prec, 3.0)) / sqrt(pi(prec) * 2u32)
}

/// `√3/(√2π)`.
fn c2(prec: u32) -> Float {
    sqrt(f(prec, 3.0)) / (sqrt(f(prec, 2.0)) * pi(prec))
}

fn sqrt6(prec: u32) -> Float {
    sqrt(f(prec, 6.0))
}

/// `0.01 · k` as an exact-as-possible float.
fn hundredths(prec: u32, k: u32) -> Float {
    Float::with_val(prec, Rational::from((k, 100)))
}

/// Upper end of `h(x)` in interval arithmetic.
fn h_upper(x: &Float) -> Float {
    h_error(&Enclosure::point(x.clone())).hi().clone()
}

fn decay(x: &Float) -> Float {
    let prec = x.prec();
    let e = Float::with_val(prec, -(pi(prec) / 2u32) * sqrt(Float::with_val(prec, x / 2u32))).exp();
    sqrt(x.clone()) * e
}

fn shifted_n_min() -> (i64, i64) {
    (335, 24)
}

fn real(lo: (i64, i64), hi: (i64, i64), lo_closed: bool, hi_closed: bool) -> Domain {
    Domain::Real(vec![RealInterval::new(lo, hi, lo_closed, hi_closed)])
}

const TOP: (i64, i64) = (10_000, 1);

/// `1 + x`-style centers shared by the product collapses.
fn abs(x: Float) -> Float {
    x.abs()
}

pub fn registry() -> Vec<InequalityCase> {
    vec![
        InequalityCase {
            name: "geometric-100",
            statement: "|1/(1-z) - 1 - z| <= 100|z|^2 for real 0 < |z| < 0.99",
            domain: Domain::Real(vec![
                RealInterval::new((-99, 100), (0, 1), false, false),
                RealInterval::new((0, 1), (99, 100), false, false),
            ]),
            note: Some("both sides tend to 98.01 as z -> 0.99"),
            eval: Evaluator::Real(|z, p| {
                let one = f(p, 1.0);
                let left = abs(Float::with_val(p, &one / Float::with_val(p, &one - z)) - &one - z);
                sides(left, Float::with_val(p, z.square_ref()) * 100u32)
            }),
        },
        InequalityCase {
            name: "sqrt-expansion",
            statement: "|sqrt(1-x) - 1 + x/2 + x^2/8| <= 0.1 x^3 for 0 <= x < 0.2",
            domain: real((0, 1), (1, 5), false, false),
            note: Some("x = 0 is an equality (both sides 0) and is not sampled"),
            eval: Evaluator::Real(|x, p| {
                let one = f(p, 1.0);
                let r = sqrt(Float::with_val(p, &one - x));
                let left = abs(r - &one + Float::with_val(p, x / 2u32) + Float::with_val(p, x.square_ref()) / 8u32);
                sides(left, x.clone().pow(3u32) * hundredths(p, 10))
            }),
        },
        InequalityCase {
            name: "inverse-sqrt",
            statement: "1/sqrt(1-x) - 1 <= 0.6 x for 0 <= x < 0.2",
            domain: real((0, 1), (1, 5), false, false),
            note: Some("x = 0 is an equality (both sides 0) and is not sampled"),
            eval: Evaluator::Real(|x, p| {
                let one = f(p, 1.0);
                let left = sqrt(Float::with_val(p, &one - x)).recip() - &one;
                sides(left, Float::with_val(p, x * hundredths(p, 60)))
            }),
        },
        InequalityCase {
            name: "reciprocal-1.25",
            statement: "|1/(1-x) - 1 - x| <= 1.25 x^2 for 0 <= x < 0.2",
            domain: real((0, 1), (1, 5), false, false),
            note: Some("x = 0 is an equality (both sides 0) and is not sampled"),
            eval: Evaluator::Real(|x, p| {
                let one = f(p, 1.0);
                let left = abs(Float::with_val(p, &one - x).recip() - &one - x);
                sides(left, Float::with_val(p, x.square_ref()) * hundredths(p, 125))
            }),
        },
        InequalityCase {
            name: "exp-leibniz",
            statement: "e^{-x} - 1 + x <= x^2/2 for x > 0 (sampled on (0, 1e4])",
            domain: real((0, 1), TOP, false, true),
            note: Some("the gap x^2/2 - (e^{-x} - 1 + x) is increasing, so the truncation loses nothing"),
            eval: Evaluator::Real(|x, p| {
                let left = Float::with_val(p, -x).exp() - 1u32 + x;
                sides(left, Float::with_val(p, x.square_ref()) / 2u32)
            }),
        },
        InequalityCase {
            name: "h-dominated",
            statement: "h(x) <= 15 x^{1/2} e^{-(pi/2) sqrt(x/2)} for x >= 12 (sampled on [12, 1e4])",
            domain: real((12, 1), TOP, true, true),
            note: Some("the ratio h(x) / (x^{1/2} e^{-(pi/2) sqrt(x/2)}) decreases beyond 12"),
            eval: Evaluator::Real(|x, _| sides(h_upper(x), decay(x) * 15u32)),
        },
        InequalityCase {
            name: "decay-monotone",
            statement: "x^{1/2} e^{-(pi/2) sqrt(x/2)} is decreasing for x >= 1, via d/dx log: 1/(2x) < pi/(4 sqrt(2x))",
            domain: real((1, 1), TOP, true, true),
            note: Some("pi/(4 sqrt(2x)) - 1/(2x) stays positive since sqrt(x) > 2 sqrt(2)/pi"),
            eval: Evaluator::Real(|x, p| {
                let left = Float::with_val(p, x * 2u32).recip();
                let right = pi(p) / (sqrt(Float::with_val(p, x * 2u32)) * 4u32);
                sides(left, right)
            }),
        },
        InequalityCase {
            name: "shifted-decay-1.1",
            statement: "(N - sqrt(N)/2)^{1/2} e^{-(pi/2) sqrt((N - sqrt(N)/2)/2)} <= 1.1/N for N >= 14 - 1/24",
            domain: real(shifted_n_min(), TOP, true, true),
            note: None,
            eval: Evaluator::Real(|n, p| {
                let y = Float::with_val(p, n - sqrt(n.clone()) / 2u32);
                sides(decay(&y), hundredths(p, 110) / n)
            }),
        },
        InequalityCase {
            name: "sqrt-gap",
            statement: "1 - x/2 - sqrt(1-x) > 0 for 0 < x < 0.2",
            domain: real((0, 1), (1, 5), false, false),
            note: None,
            eval: Evaluator::Real(|x, p| {
                let one = f(p, 1.0);
                let right = Float::with_val(p, &one - Float::with_val(p, x / 2u32)) - sqrt(Float::with_val(p, &one - x));
                sides(f(p, 0.0), right)
            }),
        },
        InequalityCase {
            name: "correction-0.99",
            statement: "sqrt(3)/(sqrt(2) pi sqrt(N)) + h(N) < 0.99 for N >= 14 - 1/24",
            domain: real(shifted_n_min(), TOP, true, true),
            note: None,
            eval: Evaluator::Real(|n, p| {
                let left = c2(p) / sqrt(n.clone()) + h_upper(n);
                sides(left, hundredths(p, 99))
            }),
        },
        InequalityCase {
            name: "exp-factor-composite",
            statement: "(0.1 pi/(4 sqrt 6) + (pi^2/24)(0.1/sqrt(N) + 1/4)^2)/N <= 0.1/N for N >= 14 - 1/24",
            domain: real(shifted_n_min(), TOP, true, true),
            note: None,
            eval: Evaluator::Real(|n, p| {
                let tenth = hundredths(p, 10);
                let a = Float::with_val(p, &tenth * pi(p)) / (sqrt6(p) * 4u32);
                let inner = Float::with_val(p, &tenth / sqrt(n.clone())) + f(p, 0.25);
                let b = pi(p).square() / 24u32 * inner.square();
                sides((a + b) / n, tenth / n)
            }),
        },
        InequalityCase {
            name: "exp-factor-direct",
            statement: "|e^{pi sqrt(2/3)(sqrt(N-J) - sqrt N) + pi J/sqrt(6N)} - 1 + pi J^2/(4 sqrt 6 N^{3/2})| <= 0.1/N for n >= 14, 1 <= J < sqrt(N)/2",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 2 }),
            note: None,
            eval: Evaluator::Lattice(|n, j, p| {
                let jj = f(p, j as f64);
                let root = sqrt(n.clone());
                let k = pi(p) * sqrt(Float::with_val(p, Rational::from((2, 3))));
                let expo = Float::with_val(p, &k * (sqrt(Float::with_val(p, n - &jj)) - &root))
                    + Float::with_val(p, pi(p) * &jj) / sqrt(Float::with_val(p, n * 6u32));
                let target = f(p, 1.0) - pi(p) * jj.square() / (sqrt6(p) * 4u32 * n * &root);
                sides(abs(expo.exp() - target), hundredths(p, 10) / n)
            }),
        },
        InequalityCase {
            name: "shift-ratio-0.2",
            statement: "J/N <= 1/(2 sqrt N) for n >= 14, 1 <= J < sqrt(N)/2",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 2 }),
            note: None,
            eval: Evaluator::Lattice(|n, j, p| {
                sides(f(p, j as f64) / n, sqrt(n.clone()).recip() / 2u32)
            }),
        },
        InequalityCase {
            name: "half-inverse-root-0.2",
            statement: "1/(2 sqrt(N)) < 0.2 for N >= 14 - 1/24",
            domain: real(shifted_n_min(), TOP, true, true),
            note: None,
            eval: Evaluator::Real(|n, p| sides(sqrt(n.clone()).recip() / 2u32, hundredths(p, 20))),
        },
        InequalityCase {
            name: "shifted-argument-12",
            statement: "N - J >= N - sqrt(N)/2 >= 12 for n >= 14, 1 <= J < sqrt(N)/2",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 2 }),
            note: Some("checked as 12 < N - sqrt(N)/2, which bounds N - J from below"),
            eval: Evaluator::Lattice(|n, _j, p| sides(f(p, 12.0), Float::with_val(p, n - sqrt(n.clone()) / 2u32))),
        },
        InequalityCase {
            name: "reciprocal-0.4",
            statement: "|N/(N-J) - 1 - J/N| <= 0.4/N for n >= 14, 1 <= J < sqrt(N)/2",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 2 }),
            note: None,
            eval: Evaluator::Lattice(|n, j, p| {
                let jj = f(p, j as f64);
                let left = Float::with_val(p, n / Float::with_val(p, n - &jj)) - 1u32 - Float::with_val(p, &jj / n);
                sides(abs(left), hundredths(p, 40) / n)
            }),
        },
        InequalityCase {
            name: "inverse-root-0.3",
            statement: "|1/sqrt(N-J) - 1/sqrt(N)| <= 0.6 J/N^{3/2} <= 0.3/N for n >= 14, 1 <= J < sqrt(N)/2",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 2 }),
            note: None,
            eval: Evaluator::Lattice(|n, j, p| {
                let jj = f(p, j as f64);
                let left = sqrt(Float::with_val(p, n - &jj)).recip() - sqrt(n.clone()).recip();
                sides(abs(left), hundredths(p, 30) / n)
            }),
        },
        InequalityCase {
            name: "collapse-0.56",
            statement: "0.4/N + pi J^3/(4 sqrt6 N^{5/2}) + 0.4 pi J^2/(4 sqrt6 N^{5/2}) + 0.1/N + 0.1 J/N^2 + 0.04/N^2 <= 0.56/N for n >= 14, 1 <= J < sqrt(N)/2",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 2 }),
            note: Some("fails for the real relaxation J = sqrt(N)/2 while N < 20.8 (0.565/N at N = 335/24); holds on the integer lattice"),
            eval: Evaluator::Lattice(|n, j, p| {
                let jj = f(p, j as f64);
                let n52 = n.clone().pow(2.5f64);
                let k = pi(p) / (sqrt6(p) * 4u32);
                let n2 = Float::with_val(p, n.square_ref());
                let left = hundredths(p, 40) / n
                    + Float::with_val(p, &k * jj.clone().pow(3u32)) / &n52
                    + Float::with_val(p, &k * hundredths(p, 40)) * Float::with_val(p, jj.square_ref()) / &n52
                    + hundredths(p, 10) / n
                    + Float::with_val(p, &jj * hundredths(p, 10)) / &n2
                    + hundredths(p, 4) / &n2;
                sides(left, hundredths(p, 56) / n)
            }),
        },
        InequalityCase {
            name: "collapse-1.31",
            statement: "sqrt3/sqrt(2pi) (0.3/N + 1.1/N) <= 1.31/N, also with 1.1/N outside the factor",
            domain: real(shifted_n_min(), TOP, true, true),
            note: Some("the error 1.1/N is read both inside and outside the factor sqrt3/sqrt(2pi); the larger reading is checked"),
            eval: Evaluator::Real(|n, p| {
                let inside = c1(p) * hundredths(p, 140);
                let outside = c1(p) * hundredths(p, 30) + hundredths(p, 110);
                sides(inside.max(&outside) / n, hundredths(p, 131) / n)
            }),
        },
        InequalityCase {
            name: "collapse-2.71",
            statement: "|u||v| + 0.56|1+v|/N + 1.31|1+u|/N + 0.56*1.31/N^2 <= 2.71/N, u = J/N - pi J^2/(4 sqrt6 N^{3/2}), v = -sqrt3/sqrt(2 pi N), for n >= 14, 1 <= J < sqrt(N)/2",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 2 }),
            note: None,
            eval: Evaluator::Lattice(|n, j, p| {
                let jj = f(p, j as f64);
                let root = sqrt(n.clone());
                let u = Float::with_val(p, &jj / n) - pi(p) * jj.square() / (sqrt6(p) * 4u32 * n * &root);
                let v = -(c1(p) / &root);
                let one = f(p, 1.0);
                let left = Float::with_val(p, u.abs_ref()) * Float::with_val(p, v.abs_ref())
                    + hundredths(p, 56) * abs(Float::with_val(p, &one + &v)) / n
                    + hundredths(p, 131) * abs(Float::with_val(p, &one + &u)) / n
                    + hundredths(p, 56) * hundredths(p, 131) / Float::with_val(p, n.square_ref());
                sides(left, hundredths(p, 271) / n)
            }),
        },
        InequalityCase {
            name: "collapse-1350",
            statement: "h(N) + 100 (sqrt3/(sqrt2 pi sqrt N) + h(N))^2 <= 1350/N for N >= 14 - 1/24",
            domain: real(shifted_n_min(), TOP, true, true),
            note: None,
            eval: Evaluator::Real(|n, p| {
                let h = h_upper(n);
                let inner = c2(p) / sqrt(n.clone()) + &h;
                sides(h + inner.square() * 100u32, f(p, 1350.0) / n)
            }),
        },
        InequalityCase {
            name: "collapse-2075",
            statement: "|a b| + 1350|1+b|/N + 2.71|1+a|/N + 1350*2.71/N^2 <= 2075/N, a = sqrt3/(sqrt2 pi sqrt N), b = 2j/N - pi j^2/(sqrt6 N^{3/2}) - sqrt3/sqrt(2 pi N), for n >= 14, 1 <= j < sqrt(N)/4",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 4 }),
            note: None,
            eval: Evaluator::Lattice(|n, j, p| sides(product_error(n, j, p, 2, 1), f(p, 2075.0) / n)),
        },
        InequalityCase {
            name: "collapse-3926",
            statement: "2(|a g| + 1350|1+g|/N + 2.71|1+a|/N + 1350*2.71/N^2) <= 3926/N, g = j/N - pi j^2/(4 sqrt6 N^{3/2}) - sqrt3/sqrt(2 pi N), for n >= 14, 1 <= j < sqrt(N)/4",
            domain: Domain::Lattice(Lattice { n_min: 14, d: 4 }),
            note: None,
            eval: Evaluator::Lattice(|n, j, p| sides(product_error(n, j, p, 1, 4) * 2u32, f(p, 3926.0) / n)),
        },
        InequalityCase {
            name: "krank-4.04",
            statement: "|1/l - pi/(4 sqrt6 l^{3/2})| + 2.71/l <= 4.04/l for l > 16",
            domain: real((16, 1), TOP, false, true),
            note: None,
            eval: Evaluator::Real(|l, p| {
                let shift = Float::with_val(p, l.recip_ref()) - pi(p) / (sqrt6(p) * 4u32 * l * sqrt(l.clone()));
                sides(abs(shift) + hundredths(p, 271) / l, hundredths(p, 404) / l)
            }),
        },
        InequalityCase {
            name: "krank-2079",
            statement: "|2/l - pi/(sqrt6 l^{3/2})| + 2075/l <= 2079/l for l > 16",
            domain: real((16, 1), TOP, false, true),
            note: None,
            eval: Evaluator::Real(|l, p| {
                let shift = Float::with_val(p, l.recip_ref()) * 2u32 - pi(p) / (sqrt6(p) * l * sqrt(l.clone()));
                sides(abs(shift) + f(p, 2075.0) / l, f(p, 2079.0) / l)
            }),
        },
        InequalityCase {
            name: "krank-3929",
            statement: "|2/l - pi/(2 sqrt6 l^{3/2})| + 3926/l <= 3929/l for l > 16",
            domain: real((16, 1), TOP, false, true),
            note: None,
            eval: Evaluator::Real(|l, p| {
                let shift = Float::with_val(p, l.recip_ref()) * 2u32 - pi(p) / (sqrt6(p) * 2u32 * l * sqrt(l.clone()));
                sides(abs(shift) + f(p, 3926.0) / l, f(p, 3929.0) / l)
            }),
        },
        InequalityCase {
            name: "bessel-negative-half",
            statement: "int_{-1}^0 (1-t^2) e^{xt} dt = (2e^{-x}/x^2)(1 + 1/x) + 1/x - 2/x^3 <= 1 for x > 0 (sampled on (0, 1e4])",
            domain: real((1, 1000), TOP, false, true),
            note: Some("sampled from x = 1e-3, where cancellation in the closed form is still far below 2^-128 relative to 1"),
            eval: Evaluator::Real(|x, p| {
                let w = p + 64;
                let x = Float::with_val(w, x);
                let x2 = Float::with_val(w, x.square_ref());
                let x3 = x.clone().pow(3u32);
                let left = Float::with_val(w, -&x).exp() * 2u32 / &x2 * (Float::with_val(w, x.recip_ref()) + 1u32)
                    + Float::with_val(w, x.recip_ref())
                    - Float::with_val(w, 2u32 / &x3);
                sides(Float::with_val(p, left), f(p, 1.0))
            }),
        },
        InequalityCase {
            name: "bessel-simplify",
            statement: "|1/x - x/2| <= x^2/2 for x >= 1",
            domain: real((1, 1), TOP, false, true),
            note: Some("x = 1 is an equality (both sides 1/2) and is sampled only from 1 + 1e-9 on; the margin grows like 2.5(x - 1) there"),
            eval: Evaluator::Real(|x, p| {
                let left = abs(Float::with_val(p, x.recip_ref()) - Float::with_val(p, x / 2u32));
                sides(left, Float::with_val(p, x.square_ref()) / 2u32)
            }),
        },
        InequalityCase {
            name: "bessel-asymptotic",
            statement: "|I_{3/2}(x) sqrt(2 pi x) e^{-x} - (1 - 1/x)| <= x^2 e^{-x} for x >= 1 (sampled on [1, 1e4])",
            domain: real((1, 1), TOP, true, true),
            note: Some("evaluated with 2x/ln 2 extra bits, since the left side is of size e^{-2x}"),
            eval: Evaluator::Real(|x, p| {
                let extra = (2.0 * x.to_f64() / std::f64::consts::LN_2).ceil() as u32 + 64;
                let w = p + extra;
                let xw = Float::with_val(w, x);
                let i = bessel_i32_closed(&xw, w).expect("positive argument");
                let scaled = i * Float::with_val(w, pi(w) * &xw * 2u32).sqrt() * Float::with_val(w, -&xw).exp();
                let left = abs(scaled - 1u32 + Float::with_val(w, xw.recip_ref()));
                let right = Float::with_val(w, xw.square_ref()) * Float::with_val(w, -&xw).exp();
                sides(left, right)
            }),
        },
        InequalityCase {
            name: "tail-head",
            statement: "sum_{2 <= k <= floor X} I_{3/2}(X/k) <= 2 sqrt(X/pi) e^{X/2} (sampled on X in [2.5, 300])",
            domain: real((5, 2), (300, 1), true, true),
            note: Some("X = pi sqrt(2N/3) >= 2.5 for every n >= 1; the upper cutoff keeps the sweep to a few million Bessel values"),
            eval: Evaluator::Real(|x, p| {
                let top = x.to_f64().floor() as u64;
                let left = bessel_tail_sum(x, 2, top, p);
                let right = sqrt(Float::with_val(p, x / pi(p))) * Float::with_val(p, x / 2u32).exp() * 2u32;
                sides(left, right)
            }),
        },
        InequalityCase {
            name: "tail-remainder",
            statement: "2 X^{3/2}/(Gamma(5/2) sqrt 2) <= 2 sqrt(X/pi) e^{X/2} for X >= 2.5",
            domain: real((5, 2), TOP, true, true),
            note: None,
            eval: Evaluator::Real(|x, p| {
                let gamma = sqrt(pi(p)) * 3u32 / 4u32;
                let left = x.clone().pow(1.5f64) * 2u32 / (gamma * sqrt(f(p, 2.0)));
                let right = sqrt(Float::with_val(p, x / pi(p))) * Float::with_val(p, x / 2u32).exp() * 2u32;
                sides(left, right)
            }),
        },
        InequalityCase {
            name: "tail-sum",
            statement: "sum_{k >= 2} I_{3/2}(X/k) <= 4 sqrt(X/pi) e^{X/2} at X in {20, 50, 100}",
            domain: Domain::Points(vec![Rational::from(20), Rational::from(50), Rational::from(100)]),
            note: Some("terms k <= 10^4 summed numerically; k > 10^4 bounded by I_{3/2}(y) <= (y/2)^{3/2} e^y / Gamma(5/2) and sum_{k > K} k^{-3/2} <= 2/sqrt(K)"),
            eval: Evaluator::Real(|x, p| {
                const K: u64 = 10_000;
                let head = bessel_tail_sum(x, 2, K, p);
                let gamma = sqrt(pi(p)) * 3u32 / 4u32;
                let y_max = Float::with_val(p, x / K);
                let tail = Float::with_val(p, Float::with_val(p, x / 2u32).pow(1.5f64)) * y_max.exp() / gamma * 2u32
                    / sqrt(f(p, K as f64));
                sides(head + tail, error_bessels_bound(x, p))
            }),
        },
    ]
}

/// `|a·g| + 1350|1+g|/N + 2.71|1+a|/N + 1350·2.71/N²` with
/// `a = √3/(√2π√N)` and `g = s·j/N - πj²/(t√6 N^{3/2}) - √3/√(2πN)`.
fn product_error(n: &Float, j: u64, p: u32, s: u32, t: u32) -> Float {
    let jj = f(p, j as f64);
    let root = sqrt(n.clone());
    let a = c2(p) / &root;
    let g = Float::with_val(p, &jj * s) / n - pi(p) * jj.square() / (sqrt6(p) * t * n * &root) - c1(p) / &root;
    let one = f(p, 1.0);
    let r1 = f(p, 1350.0) / n;
    let r2 = hundredths(p, 271) / n;
    Float::with_val(p, a.abs_ref()) * Float::with_val(p, g.abs_ref())
        + Float::with_val(p, &r1 * abs(Float::with_val(p, &one + &g)))
        + Float::with_val(p, &r2 * abs(Float::with_val(p, &one + &a)))
        + r1 * r2
}
