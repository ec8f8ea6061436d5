use crate::phase_space::ThermalParams;

/// `-ln(1 - e^{-beta}) + beta e^{-beta} / (1 - e^{-beta})`.
pub fn von_neumann_thermal(th: &ThermalParams) -> f64 {
    let b = th.beta();
    -(-(-b).exp()).ln_1p() + b / b.exp_m1()
}

/// `-ln(2 sinh(beta/2)) + (beta/2) coth(beta/2)`.
pub fn von_neumann_thermal_hyperbolic(th: &ThermalParams) -> f64 {
    let h = 0.5 * th.beta();
    -(2.0 * h.sinh()).ln() + h / h.tanh()
}
