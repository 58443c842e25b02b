//! The desk-scale regression corpus: every catalog family over small
//! parameter grids, plus seeded random graphs. Shared by the acceptance
//! suite and the claims catalog.

use crate::graph::{generate, FamilySpec, Graph};

/// Every family member with order at most `max_order`, as (label, graph).
pub fn family_corpus(max_order: usize) -> Vec<(String, Graph)> {
    let mut specs: Vec<(String, FamilySpec)> = Vec::new();
    for n in 1..=max_order {
        specs.push((format!("path:{n}"), FamilySpec::Path { n }));
    }
    for n in 3..=max_order {
        specs.push((format!("cycle:{n}"), FamilySpec::Cycle { n }));
    }
    for n in 1..=max_order {
        specs.push((format!("complete:{n}"), FamilySpec::Complete { n }));
    }
    for m in 1..=max_order {
        for n in m..=max_order.saturating_sub(m) {
            specs.push((
                format!("complete_bipartite:{m}:{n}"),
                FamilySpec::CompleteBipartite { m, n },
            ));
        }
    }
    for rim in 3..max_order {
        specs.push((format!("wheel:{rim}"), FamilySpec::Wheel { rim }));
    }
    for rim in 3..=(max_order.saturating_sub(1)) / 2 {
        specs.push((format!("double_wheel:{rim}"), FamilySpec::DoubleWheel { rim }));
    }
    for cycles in 3..=3 {
        for rim in 3..=(max_order.saturating_sub(1)) / cycles {
            specs.push((
                format!("m_wheel:{cycles}:{rim}"),
                FamilySpec::MWheel { cycles, rim },
            ));
        }
    }
    for rim in 1..max_order {
        specs.push((format!("fan:{rim}"), FamilySpec::Fan { rim }));
    }
    for n in 3..=(max_order.saturating_sub(1)) / 2 {
        specs.push((format!("gear:{n}"), FamilySpec::Gear { n }));
    }
    for n in 3..=max_order / 2 {
        specs.push((format!("complete_sun:{n}"), FamilySpec::CompleteSun { n }));
    }
    for clique in 1..max_order {
        for independent in 1..=(max_order - clique).min(4) {
            specs.push((
                format!("complete_split:{clique}:{independent}"),
                FamilySpec::CompleteSplit {
                    clique,
                    independent,
                },
            ));
        }
    }
    for blade in 2..=5 {
        for copies in 2..=4 {
            if copies * (blade - 1) < max_order {
                specs.push((
                    format!("windmill:{blade}:{copies}"),
                    FamilySpec::Windmill { blade, copies },
                ));
            }
        }
    }
    specs
        .into_iter()
        .map(|(label, spec)| {
            let g = generate(spec).expect("corpus parameters valid");
            debug_assert!(g.order() <= max_order);
            (label, g)
        })
        .collect()
}

/// `count` seeded random graphs with orders cycling over 4..=12 and edge
/// probability cycling over {0.2, 0.5, 0.8}. The master seed fully
/// determines the corpus.
pub fn random_corpus(count: usize, master_seed: u64) -> Vec<(String, Graph)> {
    (0..count)
        .map(|i| {
            let n = 4 + (i % 9);
            let p = [0.2, 0.5, 0.8][i % 3];
            let seed = master_seed.wrapping_add(i as u64);
            (
                format!("random:{n}:{p}:{seed}"),
                Graph::random(n, p, seed),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = family_corpus(14);
        let b = family_corpus(14);
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|((la, ga), (lb, gb))| la == lb && ga == gb));
        assert!(a.iter().all(|(_, g)| g.order() <= 14));
        assert!(a.len() > 80);

        let r = random_corpus(200, 20240);
        assert_eq!(r.len(), 200);
        assert!(r.iter().all(|(_, g)| g.order() <= 12));
        assert_eq!(r, random_corpus(200, 20240));
    }
}
