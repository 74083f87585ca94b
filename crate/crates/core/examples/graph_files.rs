//! Round-trip a multigraph through the text format, canonicalize it, and show
//! that relabeling does not change the polynomial.

use wildcolor::{parse_graph, serialize_graph, ChiEngine, EngineConfig, KeyMode};

const TEXT: &str = "\
# a triangle with a pendant vertex, a doubled edge and a loop
p 4 6
e 1 2
e 2 3
e 3 1
e 3 4
e 3 4
e 4 4
";

fn main() -> wildcolor::Result<()> {
    let g = parse_graph(TEXT)?;
    let text = serialize_graph(&g);
    assert_eq!(parse_graph(&text)?, g);
    print!("{text}");

    let h = g.relabel(&[4, 3, 1, 2])?;
    let same_key = g.canonical_key(KeyMode::canonical())? == h.canonical_key(KeyMode::canonical())?;
    println!("canonical keys equal after relabeling: {same_key}");

    let mut engine = ChiEngine::new(EngineConfig { memo: KeyMode::canonical(), ..EngineConfig::default() });
    println!("chi = {}", engine.chi(&g));
    println!("same for relabeled copy: {}", engine.chi(&g) == engine.chi(&h));
    println!("components: {}", g.components().len());
    Ok(())
}
