use std::time::Instant;
use trigraphs::verify::{self, Budget};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("all");

    if which == "theorem5" || which == "all" {
        let t = Instant::now();
        let r = verify::verify_theorem(5, &Budget::default()).unwrap();
        println!("theorem n=5: pass={} elapsed={:.2?} (n=5 free={:?})", r.pass(), t.elapsed(), r.stat("n=5 free"));
    }
    if which == "lemma45" || which == "all" {
        let t = Instant::now();
        let b = Budget { n_max: Some(7), ..Budget::default() };
        let r = verify::verify_proposition("lemma45", &b).unwrap();
        println!("lemma45 n<=7: pass={} elapsed={:.2?} instances={}", r.pass(), t.elapsed(), r.instances_checked);
    }
    if which == "delete3" || which == "all" {
        let t = Instant::now();
        let b = Budget { n_max: Some(6), ..Budget::default() };
        let r = verify::verify_proposition("delete-three", &b).unwrap();
        println!("delete-three n<=6: pass={} elapsed={:.2?} instances={}", r.pass(), t.elapsed(), r.instances_checked);
    }
    if which == "diamond" || which == "all" {
        let t = Instant::now();
        let b = Budget { n_max: Some(5), ..Budget::default() };
        let r = verify::verify_proposition("diamond", &b).unwrap();
        println!("diamond n<=5: pass={} elapsed={:.2?} instances={}", r.pass(), t.elapsed(), r.instances_checked);
    }
    if which == "attach" || which == "all" {
        for id in ["prism-vertex", "prism-conn", "k4-vertex", "k4-conn", "cyclic3-conn", "max-cyclic3", "k33-vertex", "k33-comp"] {
            let t = Instant::now();
            let b = Budget { samples: 1000, ..Budget::default() };
            let r = verify::verify_proposition(id, &b).unwrap();
            println!("{id} x1000: pass={} elapsed={:.2?} cex={}", r.pass(), t.elapsed(), r.counterexamples.len());
        }
    }
    if which == "oracle" || which == "all" {
        let t = Instant::now();
        let r = verify::verify_oracle_agreement(4, &Budget::default()).unwrap();
        println!("oracle n=4: pass={} elapsed={:.2?}", r.pass(), t.elapsed());
    }
}
