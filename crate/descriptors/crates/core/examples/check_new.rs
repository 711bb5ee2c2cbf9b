fn main() {
    for name in ["groupXI_ell7_ram", "groupVII_ell5_ram2"] {
        let text = std::fs::read_to_string(format!("descriptors/{name}.desc")).unwrap();
        match gsp4obs::tamerep::parse_descriptor(&text) {
            Ok(d) => {
                for p in [5u64, 11, 13] {
                    if p == d.ell { continue; }
                    match gsp4obs::tamerep::concretize(&d, p) {
                        Ok(c) => {
                            let sim = gsp4obs::symplectic::similitude(c.rep.frobenius_image()).is_some();
                            let dim = gsp4obs::obstruction::adjoint_invariants(&c.rep, true).map(|r| r.dimension);
                            println!("{name} p={p}: symplectic={sim} dim={dim:?}");
                        }
                        Err(e) => println!("{name} p={p}: CONCRETIZE ERR {e}"),
                    }
                }
            }
            Err(e) => println!("{name}: PARSE/VALIDATE ERR {e}"),
        }
    }
}
