//! Deterministic SVG output through the command-line layer: the table
//! outline with its caustic chord fans, and the phase portrait of an
//! orbit on the invariant circle. Writes `table_4_05.svg` and
//! `phase_portrait.svg` into the current directory. Run with
//!
//! ```text
//! cargo run --example plots
//! ```

use caustics::cli;

fn main() {
    let mut sink = Vec::new();
    let runs = [
        vec![
            "table".to_string(),
            "4".into(),
            "0.5".into(),
            "--plot".into(),
            "table_4_05.svg".into(),
        ],
        vec![
            "orbit-dump".to_string(),
            "omega:4,0.5".into(),
            "bn:4:1".into(),
            "400".into(),
            "--plot".into(),
            "phase_portrait.svg".into(),
        ],
    ];
    for args in &runs {
        sink.clear();
        let code = cli::run(args, &mut sink);
        assert_eq!(code, 0, "plot command failed: {args:?}");
    }
    println!("wrote table_4_05.svg (outline + chord fans for both caustic angles)");
    println!("wrote phase_portrait.svg (orbit dots on the phase cylinder)");
    println!("rerunning produces byte-identical files; no timestamps are embedded");
}
