//! Normalization of the fractional-dissipation kernel.
//!
//! The kernel form of Lambda^{1-eps} is c1(eps) * int (f(x)-f(x-a))/|a|^{2-eps} da.
//! We pin c1 by requiring the Fourier symbol of the kernel form to equal
//! |k|^{1-eps} exactly: c1(eps) = [ 2 * int_0^inf (1-cos u)/u^{2-eps} du ]^{-1},
//! making the kernel and spectral backends interchangeable.

/// int_0^inf (1 - cos u) / u^{2-eps} du, computed to ~1e-11.
///
/// Split at u = 1: the inner part by the alternating power series of 1-cos,
/// the outer part as 1/(1-eps) minus an oscillatory integral tamed by repeated
/// integration by parts until it converges fast enough for panel quadrature.
pub fn kernel_symbol_integral(eps: f64) -> f64 {
    assert!((0.0..1.0).contains(&eps), "kernel exponent out of range: {eps}");

    // int_0^1 (1-cos u) u^{eps-2} du = sum_{m>=1} (-1)^{m+1} / ((2m)! (2m+eps-1))
    let mut inner = 0.0;
    let mut factorial = 1.0_f64; // (2m)!
    for m in 1..=16 {
        factorial *= ((2 * m - 1) * (2 * m)) as f64;
        let term = 1.0 / (factorial * (2.0 * m as f64 + eps - 1.0));
        inner += if m % 2 == 1 { term } else { -term };
    }

    // int_1^inf u^{eps-2} du = 1/(1-eps); the cosine part via the recursion
    //   C(p) = -sin 1 - p S(p-1),  S(q) = cos 1 + q C(q-1)
    // down to C(eps-8), which is absolutely convergent like u^{-7.5}.
    let c8 = cos_moment_numeric(eps - 8.0);
    let s7 = 1.0_f64.cos() + (eps - 7.0) * c8;
    let c6 = -(1.0_f64.sin()) - (eps - 6.0) * s7;
    let s5 = 1.0_f64.cos() + (eps - 5.0) * c6;
    let c4 = -(1.0_f64.sin()) - (eps - 4.0) * s5;
    let s3 = 1.0_f64.cos() + (eps - 3.0) * c4;
    let c2 = -(1.0_f64.sin()) - (eps - 2.0) * s3;

    inner + 1.0 / (1.0 - eps) - c2
}

/// Spectral-exact kernel normalization c1(eps).
pub fn c1(eps: f64) -> f64 {
    1.0 / (2.0 * kernel_symbol_integral(eps))
}

/// int_1^U cos(u) u^p du by 16-point Gauss-Legendre on unit panels.
/// The recursion above amplifies this value by up to (7-eps)!/(2-eps)-ish
/// factors, so the truncation at U = 300 keeps the amplified error ~1e-12.
fn cos_moment_numeric(p: f64) -> f64 {
    const X: [f64; 8] = [
        0.0950125098376374,
        0.2816035507792589,
        0.4580167776572274,
        0.6178762444026438,
        0.7554044083550030,
        0.8656312023878318,
        0.9445750230732326,
        0.9894009349916499,
    ];
    const W: [f64; 8] = [
        0.1894506104550685,
        0.1826034150449236,
        0.1691565193950025,
        0.1495959888165767,
        0.1246289712555339,
        0.0951585116824928,
        0.0622535239386479,
        0.0271524594117541,
    ];
    let mut total = 0.0;
    for panel in 1..300u32 {
        let (a, b) = (panel as f64, panel as f64 + 1.0);
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        let mut sum = 0.0;
        for i in 0..8 {
            for s in [-1.0, 1.0] {
                let u = mid + s * half * X[i];
                sum += W[i] * u.cos() * u.powf(p);
            }
        }
        total += sum * half;
    }
    total
}
