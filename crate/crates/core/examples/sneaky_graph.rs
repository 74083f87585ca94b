//! A path with one chord, counted four ways: brute force, the vertex removal
//! rule at the chord's far end, the edge removal rule on the chord, and the
//! closed formula in terms of path counts.

use wildcolor::{check_sneaky, BruteForceBudget, ChiEngine, Family};

fn main() -> wildcolor::Result<()> {
    let mut engine = ChiEngine::default();
    let budget = BruteForceBudget { max_vertices: 12, max_colors: 4 };
    let g = Family::Sneaky { r: 2, s: 3, t: 2 }.build()?;
    println!("graph with r=2 s=3 t=2:\n{g}");
    for (r, s, t) in [(2, 2, 1), (2, 3, 2), (3, 3, 3)] {
        for l in 1..=3 {
            let c = check_sneaky(r, s, t, l, budget, &mut engine)?;
            println!("{c}");
        }
    }
    Ok(())
}
