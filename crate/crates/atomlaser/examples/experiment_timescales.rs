//! Laboratory-scale output coupling: when the occupation exchange freezes and
//! when the last squeezing envelope dies, under both readings of the quoted
//! frequencies.

use atomlaser::params::TimeGrid;
use atomlaser::scenario::{scenario_summary, scenario_table};

fn main() {
    print!("{}", scenario_summary().render());

    let grid = TimeGrid::log(1e-7, 1.0, 13).unwrap();
    let table = scenario_table(&grid).unwrap();
    println!("\nsampled curve (t in seconds):");
    println!("{:>12} {:>14} {:>14}", "t", "N_b", "S2_b");
    for row in &table.rows {
        println!(
            "{:>12.4e} {:>14.6e} {:>14.6e}",
            row[0].unwrap(),
            row[1].unwrap(),
            row[2].unwrap()
        );
    }
}
