//! Floating-point partial sums of `Σ (−1)^(n+1) sin(nx)/n`. Not exact: this
//! is the only place in the crate that uses `f64`.

/// π to 30 significant digits, the standard published value.
pub const PI_30: &str = "3.14159265358979323846264338328";

pub fn pi() -> f64 {
    PI_30.parse().expect("valid literal")
}

/// `Σ_{n=1..terms} (−1)^(n+1) sin(nx)/n` in `f64`.
pub fn abel_demo(x: f64, terms: u64) -> f64 {
    let mut sum = 0.0;
    for n in 1..=terms {
        let t = (n as f64 * x).sin() / n as f64;
        if n % 2 == 1 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    sum
}

/// Sums on both sides of the jump at `π`.
#[derive(Clone, Debug, PartialEq)]
pub struct AbelJump {
    pub offset: f64,
    pub terms: u64,
    pub below: f64,
    pub above: f64,
    /// `(π − offset)/2`, the limit from below.
    pub expected: f64,
}

pub fn abel_jump(offset: f64, terms: u64) -> AbelJump {
    let pi = pi();
    AbelJump {
        offset,
        terms,
        below: abel_demo(pi - offset, terms),
        above: abel_demo(pi + offset, terms),
        expected: (pi - offset) / 2.0,
    }
}
