//! Verifies a few catalog entries from library code and prints the reports.
//!
//! cargo run --release --example verify

use qverify::identities::{instantiate, lookup, params_from, run_all, Backend, Params, RunOptions};
use qverify::series::{qpoch_infinite, QMonomial};

fn main() -> qverify::Result<()> {
    // 1/(q;q)_inf: the partition numbers.
    let p = qpoch_infinite(&QMonomial::q_pow(1).into(), 12)?.invert()?;
    println!("1/(q;q)_inf = {p}");

    let mseq = lookup("mseq10")?;
    let bounds = vec![
        instantiate("jacobi_id", &Params::new(), Backend::Exact)?,
        instantiate("mseq10", &params_from(&mseq.slots, &[("k", "3")]), Backend::Exact)?,
        instantiate("q_gauss", &Params::new(), Backend::Numeric)?,
        instantiate("usp1", &Params::new(), Backend::Numeric)?,
    ];
    for r in run_all(&bounds, &RunOptions::default()) {
        println!("{r}");
    }
    Ok(())
}
