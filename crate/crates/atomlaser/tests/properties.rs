//! Randomized invariants: envelope symmetry and contraction, phase reduction,
//! step-window bookkeeping, grid construction, CSV formatting.

use atomlaser::csvout::{format_cell, Table};
use atomlaser::params::{envelope, reduce_phase, Gamma, TimeGrid};
use atomlaser::poisson::{Neumaier, PoissonTruncation};
use proptest::prelude::*;

proptest! {
    /// E(-nu) is the conjugate of E(nu) and never exceeds unit magnitude.
    #[test]
    fn envelope_is_conjugate_symmetric_and_contractive(
        nu in -50.0f64..50.0,
        gamma in 0.1f64..1e4,
        t in 0.0f64..100.0,
    ) {
        let g = Gamma::Finite(gamma);
        let e = envelope(nu, g, t);
        let e_conj = envelope(-nu, g, t);
        prop_assert!((e.conj() - e_conj).norm() == 0.0);
        prop_assert!(e.norm() <= 1.0 + 1e-15);
    }

    /// Without steps the envelope is a pure phase.
    #[test]
    fn unitary_envelope_has_unit_magnitude(
        nu in -50.0f64..50.0,
        t in 0.0f64..100.0,
    ) {
        let e = envelope(nu, Gamma::UnitaryLimit, t);
        prop_assert!((e.norm() - 1.0).abs() <= 4.0 * f64::EPSILON);
    }

    /// Phase reduction lands in (-pi, pi] and preserves the angle mod 2 pi.
    #[test]
    fn reduced_phase_is_principal(x in -1e6f64..1e6) {
        let y = reduce_phase(x);
        prop_assert!(y > -std::f64::consts::PI && y <= std::f64::consts::PI);
        // Compare as complex phases; the reduction must not move the point.
        let scale = x.abs().max(1.0);
        prop_assert!((((x - y) / (2.0 * std::f64::consts::PI)).round()
            * 2.0 * std::f64::consts::PI + y - x).abs() <= 1e-9 * scale);
    }

    /// Window weights are a sub-distribution whose complement is the recorded
    /// tail mass, and the tail meets the target.
    #[test]
    fn poisson_window_bookkeeping(mean in 1e-3f64..1e5) {
        let w = PoissonTruncation::with_defaults(mean).unwrap();
        prop_assert!(w.tail_mass >= 0.0 && w.tail_mass <= w.target_tail);
        prop_assert!(w.weights().iter().all(|&x| (0.0..=1.0).contains(&x)));
        let mut sum = Neumaier::default();
        for &x in w.weights() {
            sum.add(x);
        }
        prop_assert!((sum.value() + w.tail_mass - 1.0).abs() <= 4.0 * f64::EPSILON);
        prop_assert!(w.k_lo <= w.k_hi);
        prop_assert!((w.k_lo as f64) <= mean.ceil() && (w.k_hi as f64) >= mean.floor());
    }

    /// Time grids hit both endpoints exactly and increase strictly.
    #[test]
    fn grids_are_monotone_with_exact_endpoints(
        start in 0.0f64..10.0,
        span in 0.1f64..1e4,
        count in 2usize..500,
        log in proptest::bool::ANY,
    ) {
        let stop = start + span;
        let grid = if log {
            let start = start.max(1e-3);
            TimeGrid::log(start, start + span, count).unwrap()
        } else {
            TimeGrid::linear(start, stop, count).unwrap()
        };
        let pts = grid.points();
        prop_assert_eq!(pts.len(), count);
        prop_assert_eq!(pts[0], grid.start);
        prop_assert_eq!(*pts.last().unwrap(), grid.stop);
        prop_assert!(pts.windows(2).all(|w| w[1] > w[0]));
    }

    /// Formatting then parsing a cell is a fixpoint at printed precision.
    #[test]
    fn csv_cells_round_trip(
        mantissa in -10.0f64..10.0,
        exponent in -300i32..300,
    ) {
        let v = mantissa * 10f64.powi(exponent);
        let text = format_cell(v);
        let back: f64 = text.parse().unwrap();
        prop_assert_eq!(text, format_cell(back));
    }

    /// Tables survive a render/parse cycle with presence intact.
    #[test]
    fn tables_round_trip(rows in proptest::collection::vec(
        (0.0f64..1e6, proptest::option::of(-1e6f64..1e6)), 1..40))
    {
        let mut t = Table::new(vec!["t".into(), "y".into()]);
        for (x, y) in &rows {
            t.push_row(vec![Some(*x), *y]);
        }
        let back = Table::parse(&t.render()).unwrap();
        prop_assert_eq!(back.rows.len(), rows.len());
        for (row, (_, y)) in back.rows.iter().zip(&rows) {
            prop_assert_eq!(row[1].is_some(), y.is_some());
        }
    }
}
