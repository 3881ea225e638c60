//! One builder per subcommand. Each builder validates its parameters,
//! evaluates the requested sweep through the library, and returns a
//! [`Table`] ready for the writers; no builder touches the filesystem.

use crate::table::{Cell, Table};
use crate::Failure;
use landau_wigner::infometrics::{
    concurrence_sq_pure, concurrence_sq_recorded, gaussian_info, info_report,
};
use landau_wigner::phase_space::{overlap, quad2d, BasisLabel};
use landau_wigner::specfun::{
    hurwitz_zeta, riemann_zeta, zeta_residue_check, zeta_residue_extrapolated, ZetaMethod,
};
use landau_wigner::spinor_wigner::{
    gaussian_family, graphene_map, maximally_mixed, pure_state, spin_mixture, superposition,
    thermal_ensemble_auto, Band, GaussianClosedForm, OneParticleParams, Parity, Spin,
    WignerMatrix,
};
use landau_wigner::thermo::{
    entropy_thermo, free_energy, internal_energy, specific_heat, thermal_concurrence_sq,
    thermal_entropy_ps, thermal_entropy_sp, thermal_purity, ThermalSpec,
};

type Result<T> = std::result::Result<T, Failure>;

/// The four sweep angles of the level-mixing figure, as sin² values with
/// the column suffixes that carry them.
const MIX_ANGLES: [(f64, &str); 4] = [(0.0, "00"), (0.25, "14"), (0.5, "12"), (0.75, "34")];

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_grid(grid: u32) -> Result<()> {
    if grid < 2 {
        return Err(usage(format!("--grid must be at least 2, got {grid}")));
    }
    Ok(())
}

/// Inclusive linear grid from `lo` to `hi`.
fn linspace(lo: f64, hi: f64, points: u32) -> Vec<f64> {
    let span = hi - lo;
    (0..points)
        .map(|i| lo + span * i as f64 / (points - 1) as f64)
        .collect()
}

/// Parse a `start:end:step` sweep description into its grid, dropping
/// non-positive points (the thermal quantities need μ > 0).
pub fn parse_mu_range(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, end, step] = parts[..] else {
        return Err(usage(format!("expected start:end:step, got `{text}`")));
    };
    let parse = |piece: &str| {
        piece
            .parse::<f64>()
            .map_err(|_| usage(format!("`{piece}` in `{text}` is not a number")))
    };
    let (start, end, step) = (parse(start)?, parse(end)?, parse(step)?);
    if !(step.is_finite() && step > 0.0) || end < start {
        return Err(usage(format!("`{text}` does not describe a forward sweep")));
    }
    let count = ((end - start) / step + 1e-9).floor() as usize;
    Ok((0..=count)
        .map(|k| start + step * k as f64)
        .filter(|&mu| mu > 0.0)
        .collect())
}

/// A gnuplot `plot` command over one x column and several y columns.
fn line_plot(csv: &str, x: usize, ys: &[usize]) -> String {
    let clauses: Vec<String> = ys
        .iter()
        .enumerate()
        .map(|(i, y)| {
            let source = if i == 0 { format!("'{csv}'") } else { "''".into() };
            format!("{source} using {x}:{y} with lines")
        })
        .collect();
    format!("plot {}", clauses.join(", \\\n     "))
}

/// A gnuplot `plot` command drawing column `y` against column `x` once per
/// value of the selector column, using an inline filter expression.
fn filtered_plot(
    csv: &str,
    selector: (usize, &str),
    values: &[f64],
    x: usize,
    y: (usize, &str),
) -> String {
    let clauses: Vec<String> = values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let source = if i == 0 { format!("'{csv}'") } else { "''".into() };
            format!(
                "{source} using (column({sel})=={v}?column({x}):NaN):{col} \
                 with lines title '{name}, {label}={v}'",
                sel = selector.0,
                col = y.0,
                name = y.1,
                label = selector.1,
            )
        })
        .collect();
    format!("set key noautotitle\nplot {}", clauses.join(", \\\n     "))
}

/// The exact overlap table of the oscillator basis, optionally re-derived
/// by the polar quadrature oracle next to each exact entry.
pub fn basis(max_index: u32, quadrature: bool) -> Result<Table> {
    if !(1..=12).contains(&max_index) {
        return Err(usage(format!(
            "--max-index must lie in 1..=12, got {max_index}"
        )));
    }
    let top = max_index as i32;
    let mut labels: Vec<BasisLabel> = Vec::new();
    for n in 0..=top {
        labels.push(BasisLabel::l(n)?);
    }
    for n in 1..=top {
        labels.push(BasisLabel::m(n)?);
    }
    let mut columns = vec![
        "kind_a".to_string(),
        "index_a".to_string(),
        "kind_b".to_string(),
        "index_b".to_string(),
        "overlap".to_string(),
    ];
    if quadrature {
        columns.push("quadrature".to_string());
        columns.push("abs_dev".to_string());
    }
    let mut table = Table::new("basis", columns);
    table.param("max-index", max_index);
    table.param("quadrature", quadrature);
    if quadrature {
        table.param("quadrature-target", "1e-9 absolute on the basis set");
    }
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i..] {
            let exact = overlap(a, b);
            let mut row = describe_pair(a, b);
            row.push(Cell::Num(exact));
            if quadrature {
                let q = quad2d(
                    move |s, kx| 2.0 * std::f64::consts::PI * a.eval(s, kx) * b.eval(s, kx),
                    9.0,
                )?;
                row.push(Cell::Num(q));
                row.push(Cell::Num((q - exact).abs()));
            }
            table.push(row);
        }
    }
    Ok(table)
}

fn describe_pair(a: BasisLabel, b: BasisLabel) -> Vec<Cell> {
    let describe = |label: BasisLabel| match label {
        BasisLabel::L(n) => (Cell::Text("L".into()), Cell::Int(n as i64)),
        BasisLabel::M(n) => (Cell::Text("M".into()), Cell::Int(n as i64)),
    };
    let (ka, ia) = describe(a);
    let (kb, ib) = describe(b);
    vec![ka, ia, kb, ib]
}

/// The state kinds `state-info` can evaluate.
pub enum StateRequest {
    /// One degenerate-level member.
    Pure {
        /// Level index.
        n: u32,
        /// Intrinsic parity branch.
        parity: Parity,
        /// Spin orientation.
        spin: Spin,
        /// Mass in units of √(2e𝓑).
        mass: f64,
        /// Longitudinal momentum in units of √(2e𝓑).
        kz: f64,
    },
    /// Spin superposition ω(θ) inside branch r = 1.
    Superposition {
        /// Level index.
        n: u32,
        /// Mixing angle.
        theta: f64,
        /// Mass.
        mass: f64,
        /// Longitudinal momentum.
        kz: f64,
    },
    /// Two-spin statistical mixture sin²φ ω⁺ + cos²φ ω⁻.
    SpinMixture {
        /// Level index.
        n: u32,
        /// Weight angle.
        phi: f64,
        /// Mass.
        mass: f64,
        /// Longitudinal momentum.
        kz: f64,
    },
    /// Equal mixture of all members of one level.
    MaxMixed {
        /// Level index.
        n: u32,
    },
    /// Geometric level mixture 𝒲(z).
    Gaussian {
        /// Geometric weight.
        z: f64,
    },
    /// Boltzmann ensemble at inverse temperature μ and gap κ.
    Thermal {
        /// Inverse-temperature parameter.
        mu: f64,
        /// Gap parameter.
        kappa: f64,
    },
    /// Graphene-analog level state.
    Graphene {
        /// Analog level index.
        n: u32,
        /// Band branch.
        band: Band,
    },
}

impl StateRequest {
    fn build(&self) -> std::result::Result<WignerMatrix, landau_wigner::Error> {
        match *self {
            StateRequest::Pure {
                n,
                parity,
                spin,
                mass,
                kz,
            } => pure_state(&OneParticleParams::new(n, mass, kz, 1.0)?, parity, spin),
            StateRequest::Superposition { n, theta, mass, kz } => {
                superposition(&OneParticleParams::new(n, mass, kz, 1.0)?, theta)
            }
            StateRequest::SpinMixture { n, phi, mass, kz } => {
                spin_mixture(&OneParticleParams::new(n, mass, kz, 1.0)?, phi)
            }
            StateRequest::MaxMixed { n } => maximally_mixed(n),
            StateRequest::Gaussian { z } => gaussian_family(z),
            StateRequest::Thermal { mu, kappa } => thermal_ensemble_auto(mu, kappa),
            StateRequest::Graphene { n, band } => graphene_map(n, band, 1.0)?.wigner(),
        }
    }

    fn echo(&self, table: &mut Table) {
        match *self {
            StateRequest::Pure {
                n,
                parity,
                spin,
                mass,
                kz,
            } => {
                table.param("kind", "pure");
                table.param("n", n);
                table.param("parity", parity);
                table.param("spin", spin);
                table.param("mass", mass);
                table.param("kz", kz);
            }
            StateRequest::Superposition { n, theta, mass, kz } => {
                table.param("kind", "superposition");
                table.param("n", n);
                table.param("theta", theta);
                table.param("mass", mass);
                table.param("kz", kz);
            }
            StateRequest::SpinMixture { n, phi, mass, kz } => {
                table.param("kind", "spin-mixture");
                table.param("n", n);
                table.param("phi", phi);
                table.param("mass", mass);
                table.param("kz", kz);
            }
            StateRequest::MaxMixed { n } => {
                table.param("kind", "max-mixed");
                table.param("n", n);
            }
            StateRequest::Gaussian { z } => {
                table.param("kind", "gaussian");
                table.param("z", z);
            }
            StateRequest::Thermal { mu, kappa } => {
                table.param("kind", "thermal");
                table.param("mu", mu);
                table.param("kappa", kappa);
            }
            StateRequest::Graphene { n, band } => {
                table.param("kind", "graphene");
                table.param("n", n);
                table.param("band", band);
            }
        }
    }
}

/// Every quantifier of one state as a single row.
pub fn state_info(request: &StateRequest) -> Result<Table> {
    let columns = vec![
        "descriptor".to_string(),
        "normalization".to_string(),
        "purity".to_string(),
        "entropy_ps".to_string(),
        "entropy_sp".to_string(),
        "mutual_info".to_string(),
        "concurrence_sq".to_string(),
    ];
    let mut table = Table::new("state-info", columns);
    request.echo(&mut table);
    if matches!(request, StateRequest::Thermal { .. }) {
        table.param(
            "ensemble-concurrence",
            "averaged over the recorded orthogonal decomposition",
        );
    }
    let w = request.build()?;
    let report = info_report(&w)?;
    let concurrence_sq = match *request {
        StateRequest::Graphene { n, band } => {
            table.param(
                "analog-concurrence",
                "from the superposition formula at the massless constants",
            );
            Some(graphene_map(n, band, 1.0)?.concurrence_sq())
        }
        _ => report.concurrence_sq,
    };
    table.push(vec![
        Cell::Text(report.descriptor.clone()),
        Cell::Num(w.normalization()),
        Cell::Num(report.purity),
        Cell::Num(report.entropy_ps),
        Cell::Num(report.entropy_sp),
        Cell::Num(report.mutual_info),
        Cell::opt(concurrence_sq),
    ]);
    Ok(table)
}

/// Correlation and concurrence of massless level superpositions and
/// mixtures, swept over the magnetic mixing B ∈ [0, 1] for the four
/// canonical angles sin² ∈ {0, 1/4, 1/2, 3/4}.
pub fn fig1(grid: u32, n: u32, massless: bool) -> Result<Table> {
    check_grid(grid)?;
    let mut columns = vec!["b".to_string()];
    for family in ["sup", "mix"] {
        for (_, tag) in MIX_ANGLES {
            columns.push(format!("{family}_m_{tag}"));
            columns.push(format!("{family}_c2_{tag}"));
            columns.push(format!("{family}_c_{tag}"));
        }
    }
    let mut table = Table::new("fig1", columns);
    table.param("massless", massless);
    table.param("grid", grid);
    table.param("n", n);
    table.param("angles", "suffix 00, 14, 12, 34 carries sin^2 = 0, 1/4, 1/2, 3/4");
    table.param("angle-map", "theta = phi = asin(sqrt(sin^2))");
    for &b in &linspace(0.0, 1.0, grid) {
        let params = OneParticleParams::massless_from_b(n, b, 1.0)?;
        let mut row = vec![Cell::Num(b)];
        for (sin_sq, _) in MIX_ANGLES {
            let angle = sin_sq.sqrt().asin();
            let state = superposition(&params, angle)?;
            let c2 = concurrence_sq_pure(&state)?;
            row.push(Cell::Num(info_report(&state)?.mutual_info));
            row.push(Cell::Num(c2));
            row.push(Cell::Num(c2.max(0.0).sqrt()));
        }
        for (sin_sq, _) in MIX_ANGLES {
            let angle = sin_sq.sqrt().asin();
            let state = spin_mixture(&params, angle)?;
            let c2 = concurrence_sq_recorded(&state)?;
            row.push(Cell::Num(info_report(&state)?.mutual_info));
            row.push(Cell::Num(c2));
            row.push(Cell::Num(c2.max(0.0).sqrt()));
        }
        table.push(row);
    }
    table.gnuplot = Some(line_plot("fig1.csv", 1, &[2, 5, 8, 11, 14, 17, 20, 23]));
    Ok(table)
}

/// Dual-route quantifiers of the geometric family at one weight: the
/// coefficient pipeline on the truncated series state next to the printed
/// closed forms.
pub fn gaussian(z: f64) -> Result<Table> {
    let columns = [
        "z",
        "purity_series",
        "purity_closed",
        "entropy_ps_series",
        "entropy_ps_closed",
        "entropy_sp_series",
        "entropy_sp_closed",
        "mutual_info_series",
        "mutual_info_closed",
        "concurrence_sq_recorded",
        "concurrence_sq_max",
        "sigma_sq_series",
        "sigma_sq_closed",
    ];
    let mut table = Table::new("gaussian", columns.iter().map(|c| c.to_string()).collect());
    table.param("z", z);
    table.param(
        "concurrence",
        "the family fixes no unique decomposition; the recorded column stays \
         empty and the max column carries the closed bound z/2",
    );
    let state = gaussian_family(z)?;
    let report = info_report(&state)?;
    let closed = gaussian_info(z)?;
    let sigma_closed = (z * z + 1.0) / (2.0 * (1.0 - z));
    table.push(vec![
        Cell::Num(z),
        Cell::Num(report.purity),
        Cell::Num(closed.purity),
        Cell::Num(report.entropy_ps),
        Cell::Num(closed.entropy_ps),
        Cell::Num(report.entropy_sp),
        Cell::Num(closed.entropy_sp),
        Cell::Num(report.mutual_info),
        Cell::Num(closed.mutual_info),
        Cell::opt(report.concurrence_sq),
        Cell::Num(closed.concurrence_sq),
        Cell::Num(state.trace_density().second_moment()),
        Cell::Num(sigma_closed),
    ]);
    Ok(table)
}

/// Phase-space profile of the geometric family: density and matrix diagonal
/// of the polar closed form on a square grid.
pub fn fig_gaussian_density(z: f64, grid: u32, range: f64) -> Result<Table> {
    check_grid(grid)?;
    if !(range.is_finite() && range > 0.0) {
        return Err(usage(format!("--range must be positive, got {range}")));
    }
    let closed = GaussianClosedForm::new(z)?;
    let columns = ["s", "kx", "density", "w11", "w22", "w33", "w44"];
    let mut table = Table::new(
        "fig-gaussian-density",
        columns.iter().map(|c| c.to_string()).collect(),
    );
    table.param("z", z);
    table.param("grid", grid);
    table.param("range", range);
    let axis = linspace(-range, range, grid);
    for &s in &axis {
        for &kx in &axis {
            let diag = closed.diagonal(s, kx);
            table.push(vec![
                Cell::Num(s),
                Cell::Num(kx),
                Cell::Num(closed.density(s, kx)),
                Cell::Num(diag[0]),
                Cell::Num(diag[1]),
                Cell::Num(diag[2]),
                Cell::Num(diag[3]),
            ]);
        }
    }
    table.gnuplot = Some(format!(
        "set dgrid3d {grid},{grid}\nset pm3d map\nsplot 'fig-gaussian-density.csv' using 1:2:3"
    ));
    Ok(table)
}

/// The closed-form information balance of the geometric family swept over
/// its weight.
pub fn fig_gaussian_info(grid: u32, z_max: f64) -> Result<Table> {
    check_grid(grid)?;
    if !(0.0..1.0).contains(&z_max) {
        return Err(usage(format!("--z-max must lie in [0, 1), got {z_max}")));
    }
    let columns = [
        "z",
        "purity",
        "entropy_ps",
        "entropy_sp",
        "mutual_info",
        "concurrence_sq_max",
        "sigma_sq",
    ];
    let mut table = Table::new(
        "fig-gaussian-info",
        columns.iter().map(|c| c.to_string()).collect(),
    );
    table.param("grid", grid);
    table.param("z-max", z_max);
    for &z in &linspace(0.0, z_max, grid) {
        let forms = gaussian_info(z)?;
        table.push(vec![
            Cell::Num(z),
            Cell::Num(forms.purity),
            Cell::Num(forms.entropy_ps),
            Cell::Num(forms.entropy_sp),
            Cell::Num(forms.mutual_info),
            Cell::Num(forms.concurrence_sq),
            Cell::Num((z * z + 1.0) / (2.0 * (1.0 - z))),
        ]);
    }
    table.gnuplot = Some(line_plot("fig-gaussian-info.csv", 1, &[2, 3, 4, 5, 6]));
    Ok(table)
}

const THERMO_COLUMNS: [&str; 13] = [
    "mu", "kappa", "z_direct", "z_zeta", "u", "c", "f", "s", "purity", "i_ps", "i_sp", "c2",
    "flags",
];

fn thermo_row(mu: f64, kappa: f64, order: usize) -> Result<Vec<Cell>> {
    let spec = ThermalSpec {
        order,
        ..ThermalSpec::new(mu, kappa)
    };
    let report = spec.evaluate()?;
    let flags = if report.zeta_fallback {
        "zeta_fallback"
    } else {
        ""
    };
    Ok(vec![
        Cell::Num(report.mu),
        Cell::Num(report.kappa),
        Cell::Num(report.z_direct),
        Cell::Num(report.z_zeta),
        Cell::Num(report.internal_energy),
        Cell::Num(report.specific_heat),
        Cell::Num(report.free_energy),
        Cell::Num(report.entropy),
        Cell::Num(report.purity),
        Cell::opt(report.info_ps),
        Cell::opt(report.info_sp),
        Cell::opt(report.concurrence_sq),
        Cell::Text(flags.into()),
    ])
}

/// Every thermodynamic and thermal-information quantity at one grid point.
pub fn thermo(mu: f64, kappa: f64, order: usize) -> Result<Table> {
    let mut table = Table::new(
        "thermo",
        THERMO_COLUMNS.iter().map(|c| c.to_string()).collect(),
    );
    table.param("mu", mu);
    table.param("kappa", kappa);
    table.param("order", order);
    table.param("info-columns", "gapless closed forms; empty for kappa > 0");
    let row = thermo_row(mu, kappa, order)?;
    table.push(row);
    Ok(table)
}

/// Internal energy, specific heat, free energy, and entropy swept over the
/// inverse temperature for each requested gap.
pub fn fig_thermo(kappas: &[f64], mu_min: f64, mu_max: f64, grid: u32) -> Result<Table> {
    check_grid(grid)?;
    if !(mu_min.is_finite() && mu_min > 0.0) || mu_max <= mu_min {
        return Err(usage(format!(
            "need 0 < --mu-min < --mu-max, got {mu_min}..{mu_max}"
        )));
    }
    let columns = ["kappa", "mu", "u", "c", "f", "s"];
    let mut table = Table::new("fig-thermo", columns.iter().map(|c| c.to_string()).collect());
    table.param("kappa", join(kappas));
    table.param("mu-min", mu_min);
    table.param("mu-max", mu_max);
    table.param("grid", grid);
    for &kappa in kappas {
        for &mu in &linspace(mu_min, mu_max, grid) {
            table.push(vec![
                Cell::Num(kappa),
                Cell::Num(mu),
                Cell::Num(internal_energy(mu, kappa)?),
                Cell::Num(specific_heat(mu, kappa)?),
                Cell::Num(free_energy(mu, kappa)?),
                Cell::Num(entropy_thermo(mu, kappa)?),
            ]);
        }
    }
    table.gnuplot = Some(filtered_plot("fig-thermo.csv", (1, "kappa"), kappas, 2, (4, "c")));
    Ok(table)
}

/// Occupation purity swept over the inverse temperature for each gap.
pub fn fig_thermal_purity(kappas: &[f64], mu_range: &str) -> Result<Table> {
    let grid = parse_mu_range(mu_range)?;
    let columns = ["kappa", "mu", "purity"];
    let mut table = Table::new(
        "fig-thermal-purity",
        columns.iter().map(|c| c.to_string()).collect(),
    );
    table.param("kappa", join(kappas));
    table.param("mu", mu_range);
    table.param("mu-points", grid.len());
    for &kappa in kappas {
        for &mu in &grid {
            table.push(vec![
                Cell::Num(kappa),
                Cell::Num(mu),
                Cell::Num(thermal_purity(mu, kappa)?),
            ]);
        }
    }
    table.gnuplot = Some(filtered_plot(
        "fig-thermal-purity.csv",
        (1, "kappa"),
        kappas,
        2,
        (3, "purity"),
    ));
    Ok(table)
}

/// The gapless thermal-information profile: purity, both deficits, the
/// correlation measure, and the ensemble concurrence over μ at κ = 0.
pub fn fig_thermal_info(mu_range: &str) -> Result<Table> {
    let grid = parse_mu_range(mu_range)?;
    let columns = [
        "mu",
        "purity",
        "entropy_ps",
        "entropy_sp",
        "mutual_info",
        "concurrence_sq",
    ];
    let mut table = Table::new(
        "fig-thermal-info",
        columns.iter().map(|c| c.to_string()).collect(),
    );
    table.param("kappa", 0);
    table.param("mu", mu_range);
    table.param("mu-points", grid.len());
    for &mu in &grid {
        let purity = thermal_purity(mu, 0.0)?;
        let i_ps = thermal_entropy_ps(mu)?;
        let i_sp = thermal_entropy_sp(mu)?;
        table.push(vec![
            Cell::Num(mu),
            Cell::Num(purity),
            Cell::Num(i_ps),
            Cell::Num(i_sp),
            Cell::Num(i_ps + i_sp - (1.0 - purity)),
            Cell::Num(thermal_concurrence_sq(mu)?),
        ]);
    }
    table.gnuplot = Some(line_plot("fig-thermal-info.csv", 1, &[2, 3, 4, 5, 6]));
    Ok(table)
}

/// Residue, continuation, and anchor diagnostics of the zeta machinery:
/// every row carries a primary value, an independent reference, and their
/// absolute gap.
pub fn zeta_check(kappas: &[f64]) -> Result<Table> {
    let columns = ["check", "x", "a", "primary", "reference", "abs_gap"];
    let mut table = Table::new("zeta-check", columns.iter().map(|c| c.to_string()).collect());
    table.param("kappa", join(kappas));
    table.param("residue", "(z-1) zeta(z, a) at z = 1 + x, extrapolated to 1");
    table.param("dual_method", "production continuation vs series oracle");
    table.param("anchor", "closed-form reference values");
    for &a in kappas {
        for eps in [1e-2, 1e-3, 1e-4] {
            let value = zeta_residue_check(a, eps)?;
            table.push(vec![
                Cell::Text("residue".into()),
                Cell::Num(eps),
                Cell::Num(a),
                Cell::Num(value),
                Cell::Num(1.0),
                Cell::Num((value - 1.0).abs()),
            ]);
        }
        let extrapolated = zeta_residue_extrapolated(a)?;
        table.push(vec![
            Cell::Text("residue_extrapolated".into()),
            Cell::Empty,
            Cell::Num(a),
            Cell::Num(extrapolated),
            Cell::Num(1.0),
            Cell::Num((extrapolated - 1.0).abs()),
        ]);
    }
    let em = ZetaMethod::euler_maclaurin();
    let series = ZetaMethod::hasse_series();
    for i in 0..=23 {
        let s = -6.0 + 0.25 * i as f64;
        for a in [0.5, 1.0, 2.0, 10.0] {
            let lhs = hurwitz_zeta(s, a, &em)?;
            let rhs = hurwitz_zeta(s, a, &series)?;
            table.push(vec![
                Cell::Text("dual_method".into()),
                Cell::Num(s),
                Cell::Num(a),
                Cell::Num(lhs),
                Cell::Num(rhs),
                Cell::Num((lhs - rhs).abs()),
            ]);
        }
    }
    for a in [0.3, 1.0, 2.5, 10.0] {
        let value = hurwitz_zeta(0.0, a, &em)?;
        table.push(vec![
            Cell::Text("anchor_zero".into()),
            Cell::Num(0.0),
            Cell::Num(a),
            Cell::Num(value),
            Cell::Num(0.5 - a),
            Cell::Num((value - (0.5 - a)).abs()),
        ]);
    }
    let minus_one = riemann_zeta(-1.0)?;
    table.push(vec![
        Cell::Text("anchor_riemann".into()),
        Cell::Num(-1.0),
        Cell::Num(1.0),
        Cell::Num(minus_one),
        Cell::Num(-1.0 / 12.0),
        Cell::Num((minus_one + 1.0 / 12.0).abs()),
    ]);
    Ok(table)
}

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_range_parsing_skips_nonpositive_points() {
        let grid = parse_mu_range("0:1:0.25").unwrap();
        assert_eq!(grid, vec![0.25, 0.5, 0.75, 1.0]);
        assert!(parse_mu_range("1:0:0.1").is_err());
        assert!(parse_mu_range("0:1:-0.1").is_err());
        assert!(parse_mu_range("0;1;0.1").is_err());
    }

    #[test]
    fn fig1_rows_have_uniform_width() {
        let table = fig1(3, 1, true).unwrap();
        assert_eq!(table.columns.len(), 25);
        assert_eq!(table.rows.len(), 3);
        for row in &table.rows {
            assert_eq!(row.len(), 25);
        }
    }
}
