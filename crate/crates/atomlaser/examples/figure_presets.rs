//! Emit the standard curve sets from the library: list the presets, evaluate
//! one on a coarse grid, and write the full CSV next to the binary's CWD.

use atomlaser::params::TimeGrid;
use atomlaser::presets::{figure_table, preset, PRESET_IDS};

fn main() {
    println!("available presets:");
    for id in PRESET_IDS {
        let p = preset(id).unwrap();
        let labels: Vec<&str> = p.curves.iter().map(|c| c.label.as_str()).collect();
        println!(
            "  {}: {} curves on [{}, {}] ({:?}): {}",
            p.id,
            p.curves.len(),
            p.default_grid.start,
            p.default_grid.stop,
            p.default_grid.spacing,
            labels.join(", ")
        );
    }

    let fig3 = preset("fig3").unwrap();
    let coarse = TimeGrid::linear(0.0, 10.0, 11).unwrap();
    let table = figure_table(&fig3, &coarse).unwrap();
    println!("\nfig3 on a coarse grid:");
    print!("{}", table.render());

    let out = std::env::temp_dir().join("fig3.csv");
    figure_table(&fig3, &fig3.default_grid)
        .unwrap()
        .write(&out)
        .unwrap();
    println!("\nwrote the full 2000-point table to {}", out.display());
}
