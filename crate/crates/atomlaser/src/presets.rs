//! Named parameter presets for the five standard reproduction curves.
//!
//! Each preset pins a parameter table (frozen; unit-tested against literals),
//! a default time grid, and the observable plotted per curve. `figure_table`
//! evaluates the closed-form observables over the grid into a CSV table.

use crate::analytic::observable_point;
use crate::csvout::Table;
use crate::error::{Error, Result};
use crate::params::{Gamma, ModelParams, TimeGrid};

/// Which scalar a curve tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    MandelQA,
    MandelQB,
    S2B,
}

impl Observable {
    fn column_prefix(self) -> &'static str {
        match self {
            Observable::MandelQA => "Q_a",
            Observable::MandelQB => "Q_b",
            Observable::S2B => "S2_b",
        }
    }
}

/// One curve: a parameter set and the observable to extract.
#[derive(Debug, Clone)]
pub struct Curve {
    pub label: String,
    pub params: ModelParams,
    pub observable: Observable,
}

/// A named figure preset: several curves sharing one time grid.
#[derive(Debug, Clone)]
pub struct FigurePreset {
    pub id: &'static str,
    pub curves: Vec<Curve>,
    pub default_grid: TimeGrid,
}

pub const PRESET_IDS: [&str; 5] = ["fig1", "fig2", "fig3", "fig4", "fig5"];

fn gamma_label(g: Gamma) -> String {
    match g {
        Gamma::UnitaryLimit => "inf".to_string(),
        Gamma::Finite(v) => format!("{}", v),
    }
}

fn delta_label(d: f64) -> String {
    if d == 0.0 {
        "0".to_string()
    } else {
        format!("{:e}", d)
    }
}

/// Look up a preset by id (`fig1` .. `fig5`).
pub fn preset(id: &str) -> Result<FigurePreset> {
    match id {
        "fig1" | "fig2" => {
            let observable = if id == "fig1" {
                Observable::MandelQA
            } else {
                Observable::MandelQB
            };
            let mut curves = Vec::new();
            for gamma in [Gamma::UnitaryLimit, Gamma::Finite(100.0)] {
                curves.push(Curve {
                    label: format!(
                        "{}_gamma_{}",
                        observable.column_prefix(),
                        gamma_label(gamma)
                    ),
                    params: ModelParams::zero_phase(0.0, 1.0, gamma, 2.0)?,
                    observable,
                });
            }
            Ok(FigurePreset {
                id: if id == "fig1" { "fig1" } else { "fig2" },
                curves,
                default_grid: TimeGrid::linear(0.0, 10.0, 2000)?,
            })
        }
        "fig3" => {
            let mut curves = Vec::new();
            for gamma in [
                Gamma::UnitaryLimit,
                Gamma::Finite(1000.0),
                Gamma::Finite(100.0),
            ] {
                curves.push(Curve {
                    label: format!("S2_b_gamma_{}", gamma_label(gamma)),
                    params: ModelParams::zero_phase(0.1, std::f64::consts::PI, gamma, 0.3)?,
                    observable: Observable::S2B,
                });
            }
            Ok(FigurePreset {
                id: "fig3",
                curves,
                default_grid: TimeGrid::linear(0.0, 10.0, 2000)?,
            })
        }
        "fig4" => Ok(FigurePreset {
            id: "fig4",
            curves: vec![Curve {
                label: "S2_b_gamma_100".to_string(),
                params: ModelParams::zero_phase(10.0, 10.0, Gamma::Finite(100.0), 0.3)?,
                observable: Observable::S2B,
            }],
            default_grid: TimeGrid::linear(0.0, 20.0, 2000)?,
        }),
        "fig5" => {
            let mut curves = Vec::new();
            for k in 0..4u32 {
                let delta = k as f64 * 1e-7;
                curves.push(Curve {
                    label: format!("S2_b_delta_{}", delta_label(delta)),
                    params: ModelParams::zero_phase(10.0, 10.0 + delta, Gamma::Finite(100.0), 0.4)?,
                    observable: Observable::S2B,
                });
            }
            Ok(FigurePreset {
                id: "fig5",
                curves,
                default_grid: TimeGrid::log(0.1, 1e8, 2000)?,
            })
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Evaluate a preset's curves over a grid. Column 0 is `t`; undefined Mandel Q
/// cells stay empty.
pub fn figure_table(preset: &FigurePreset, grid: &TimeGrid) -> Result<Table> {
    let mut headers = vec!["t".to_string()];
    headers.extend(preset.curves.iter().map(|c| c.label.clone()));
    let mut table = Table::new(headers);
    for &t in &grid.points() {
        let mut row = vec![Some(t)];
        for curve in &preset.curves {
            let point = observable_point(&curve.params, t);
            row.push(match curve.observable {
                Observable::MandelQA => point.q_a,
                Observable::MandelQB => point.q_b,
                Observable::S2B => Some(point.s2_b),
            });
        }
        table.push_row(row);
    }
    Ok(table)
}
