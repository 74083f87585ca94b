//! Compute the coloring polynomial of a few small graphs and read off the
//! chromatic polynomial (`y = 0`) and the independence count (`x = 1`).

use wildcolor::{ChiEngine, Family, MultiGraph};

fn main() -> wildcolor::Result<()> {
    let mut engine = ChiEngine::default();
    let graphs = [
        ("path P_4", Family::Path(4).build()?),
        ("cycle C_5", Family::Cycle(5).build()?),
        ("K_4", MultiGraph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])?),
        ("double edge with a loop", MultiGraph::new(2, [(1, 2), (1, 2), (2, 2)])?),
    ];
    for (name, g) in &graphs {
        let chi = engine.chi(g);
        println!("{name}");
        println!("  chi(x, y)   = {chi}");
        println!("  chi(x, 0)   = {}", chi.subs_y(0));
        println!("  chi(1, y)   = {}", chi.subs_x(1));
        println!("  chi(3, 2)   = {}", chi.eval(3, 2));
    }
    let stats = engine.stats();
    println!("engine: {} calls, {} memo hits, {} cached graphs", stats.calls, stats.memo_hits, engine.memo_len());
    Ok(())
}
