use trigraphs::verify::{self, Budget};

fn main() {
    for id in ["prism-conn", "k4-conn", "cyclic3-conn", "max-cyclic3", "k33-vertex", "prism-realization", "k33-or-prism", "k33-strong"] {
        let b = Budget { samples: 400, ..Budget::default() };
        let r = verify::verify_proposition(id, &b).unwrap();
        println!("== {id}: pass={} instances={}", r.pass(), r.instances_checked);
        for (k, v) in &r.stats {
            println!("   {k}: {v}");
        }
    }
}
