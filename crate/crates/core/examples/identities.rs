use wildcolor::sequences::format_reports;
use wildcolor::{verify_identity, IdentityId, SeqParams};

fn main() -> wildcolor::Result<()> {
    let l = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let general = SeqParams::new(3, l)?;
    let unit = SeqParams::new(1, l)?;
    let reports = IdentityId::ALL
        .into_iter()
        .map(|id| verify_identity(id, if id.requires_k_one() { unit } else { general }, 18))
        .collect::<wildcolor::Result<Vec<_>>>()?;
    print!("{}", format_reports(&reports));
    Ok(())
}
