//! Paths and cycles evaluated at `(1,1)` give Fibonacci and Lucas numbers;
//! paths at `(2,1)` give the Pell companion numbers.

use wildcolor::{a_seq, b_seq, classic_sequence, ChiEngine, Classic, Family, SeqParams};

fn main() -> wildcolor::Result<()> {
    let p = SeqParams::new(1, 1)?;
    let a = a_seq(p, 12);
    let b = b_seq(p, 12);
    let fib = classic_sequence(Classic::Fibonacci, 14);
    let lucas = classic_sequence(Classic::Lucas, 12);
    let pell = classic_sequence(Classic::Pell, 13);

    let mut engine = ChiEngine::default();
    println!("{:>3} {:>6} {:>6} {:>6} {:>6} {:>8}", "n", "P_n", "F_n+2", "C_n", "L_n", "P_n(2,1)");
    for n in 1..=12u32 {
        let i = n as usize;
        let path = engine.chi(&Family::Path(n).build()?);
        let cycle = engine.chi(&Family::Cycle(n).build()?);
        assert_eq!(path.eval(1, 1), a[i]);
        assert_eq!(cycle.eval(1, 1), b[i - 1]);
        assert_eq!(path.eval(2, 1), pell[i + 1]);
        println!("{n:>3} {:>6} {:>6} {:>6} {:>6} {:>8}", a[i], fib[i + 2], b[i - 1], lucas[i - 1], path.eval(2, 1));
    }
    Ok(())
}
