//! Regenerates the committed generator fixtures for the search-derived
//! groups (Q₈ embeddings and the 2.Alt₅ subgroups). The searches are
//! deterministic with lexicographic tie-breaking, so reruns are
//! byte-identical; `construct::tests::fixtures_reproducible` pins that.
//!
//! Usage: cargo run --example gen_fixtures

use pcensus::construct::{q8_in_gl2, two_alt5_in_sl2};
use pcensus::group::DEFAULT_CAP;

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    for q in [5u64, 7] {
        let g = q8_in_gl2(q, DEFAULT_CAP).unwrap();
        std::fs::write(dir.join(format!("q8_gl2_{q}.grp")), g.serialize()).unwrap();
    }
    for q in [11u64, 19] {
        let g = two_alt5_in_sl2(q, DEFAULT_CAP).unwrap();
        std::fs::write(dir.join(format!("two_alt5_sl2_{q}.grp")), g.serialize()).unwrap();
    }
    println!("fixtures written to {}", dir.display());
}
