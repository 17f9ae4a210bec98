use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use toeplitz_core::moments::{enumerate_pairings, fit_contribution, limit_moment, Pairing};

fn main() {
    let t0 = std::time::Instant::now();
    let m6 = limit_moment(6).unwrap();
    println!("M6 = {} ({:?})", m6.value, t0.elapsed());
    let mut groups: BTreeMap<Vec<usize>, (usize, String, usize)> = BTreeMap::new();
    for pc in &m6.per_pairing {
        let key = pc.pairing.rotation_class_key();
        let e = groups
            .entry(key)
            .or_insert((0, pc.contribution.to_string(), pc.crossing));
        e.0 += 1;
    }
    for (k, v) in &groups {
        println!("  class {:?}: size {} contribution {} crossings {}", k, v.0, v.1, v.2);
    }

    let t0 = std::time::Instant::now();
    let m8 = limit_moment(8).unwrap();
    println!("M8 = {} = {} ({:?})", m8.value, m8.value_f64(), t0.elapsed());

    // the contested pairing: edges (1,3),(2,4),(5,7),(6,8) in 1-based = (0,2),(1,3),(4,6),(5,7)
    let p = Pairing::from_pairs(&[(0, 2), (1, 3), (4, 6), (5, 7)]).unwrap();
    let c = fit_contribution(&p).unwrap();
    println!("contribution((0,2),(1,3),(4,6),(5,7)) = {}", c.contribution);

    // min over all 105 pairings, and the multiset of contributions
    let mut by_value: BTreeMap<String, usize> = BTreeMap::new();
    let mut min = None::<(String, Vec<usize>)>;
    for p in enumerate_pairings(4).unwrap() {
        let c = fit_contribution(&p).unwrap().contribution;
        *by_value.entry(format!("{c}")).or_insert(0) += 1;
        let key = (c.to_f64().unwrap(), format!("{c}"));
        match &min {
            None => min = Some((key.1.clone(), p.partner().to_vec())),
            Some((m, _)) => {
                let mv: Vec<f64> = m.split('/').map(|x| x.parse().unwrap()).collect();
                let mf = if mv.len() == 2 { mv[0] / mv[1] } else { mv[0] };
                if key.0 < mf {
                    min = Some((key.1.clone(), p.partner().to_vec()));
                }
            }
        }
    }
    println!("k=4 contribution multiset: {:?}", by_value);
    println!("k=4 minimum: {:?}", min);
}
