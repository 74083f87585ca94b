//! Mine the shortest linear recurrence of the cycle sequence `b_n(k,l)` and
//! compare it with the Hankel determinant that decides whether order 3 is
//! really needed.

use wildcolor::{b_seq, hankel_det_b, minimal_recurrence, SeqParams};

fn main() -> wildcolor::Result<()> {
    for p in SeqParams::grid(3) {
        let values = b_seq(p, 12);
        let rec = minimal_recurrence(&values, 3)?;
        let det = hankel_det_b(p);
        let rec = rec.map_or_else(|| "none".to_string(), |r| r.to_string());
        println!("{p}: {rec:<28} det={} closed_form={}", det.numeric, det.closed_form);
    }
    Ok(())
}
