use absorb_core::ideal::enumerate_ideals;
use absorb_core::predicate::{is_n_absorbing_i_primary, ScanOpts};
use absorb_core::verify::default_battery;

fn main() {
    let opts = ScanOpts::default();
    let mut violations = 0;
    for ring in default_battery().unwrap() {
        let ideals = enumerate_ideals(&ring).unwrap();
        for p in ideals.iter().filter(|p| p.is_proper()) {
            for i in &ideals {
                for n in 1..=2usize {
                    let low = is_n_absorbing_i_primary(p, i, n, &opts).unwrap();
                    let high = is_n_absorbing_i_primary(p, i, n + 1, &opts).unwrap();
                    if low.holds && !high.holds {
                        violations += 1;
                        println!(
                            "MONOTONE VIOLATION {} P=({:?}) I=({:?}) n={} -> n+1 witness {:?}",
                            ring.spec_text(),
                            p.gens_text(),
                            i.gens_text(),
                            n,
                            high.witness_indices()
                        );
                    }
                }
            }
        }
    }
    println!("total monotonicity violations over battery (n=1..2 vs n+1): {violations}");
}
