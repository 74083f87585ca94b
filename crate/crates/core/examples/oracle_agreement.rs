//! Cross-check the symbolic polynomial against brute-force enumeration and
//! the subset-convolution count on a seeded batch of random multigraphs.

use wildcolor::corpus::random_multigraphs;
use wildcolor::{count_bruteforce, count_subset_expansion, BruteForceBudget, ChiEngine, ColoringParams, SubsetBudget};

fn main() -> wildcolor::Result<()> {
    let mut engine = ChiEngine::default();
    let mut cases = 0;
    for g in random_multigraphs(200, 6, 8, 7) {
        let chi = engine.chi(&g);
        for (k, l) in [(1, 1), (2, 1), (3, 0), (1, 3), (2, 2)] {
            let p = ColoringParams::new(k, l);
            let symbolic = chi.eval(k.into(), l.into());
            let brute = count_bruteforce(&g, p, BruteForceBudget::default())?;
            let subset = count_subset_expansion(&g, p, SubsetBudget::default())?;
            assert!(symbolic == brute && brute == subset, "{g:?} at ({k},{l})");
            cases += 1;
        }
    }
    println!("all three methods agree on {cases} cases");
    Ok(())
}
