use std::collections::BTreeMap;

use confluence_core::algebra::{const_proj, derivation, Letter};
use confluence_core::confluence::{
    confluence_relation, generate_confluence, generate_duality, generate_rds, phi_shuffle,
    phi_stuffle, phi_tensor, Mode,
};
use confluence_core::golden::reference_table;
use confluence_core::linalg::{expected_relation_rank, kernel, span_of, EchelonBasis};
use confluence_core::{NCPoly, Rational, SubspaceTag, Word};
use num_traits::Zero;

fn confluence_span(k: usize, mode: Mode) -> EchelonBasis {
    let recs = generate_confluence(k, mode).unwrap();
    span_of(recs.iter().map(|r| &r.body), k).unwrap()
}

#[test]
fn reference_rows_reproduced() {
    for (w, body) in reference_table() {
        let r = confluence_relation(&w).unwrap();
        assert_eq!(r.body, body, "{w}");
        assert!(r.body.is_integral());
    }
}

#[test]
fn two_letter_words_give_zero_bodies() {
    let table: BTreeMap<Word, NCPoly> = reference_table().into_iter().collect();
    for k in 3..=4 {
        for r in generate_confluence(k, Mode::Shuffle).unwrap() {
            let word = match &r.source {
                confluence_core::Source::Word(w) => w.clone(),
                _ => unreachable!(),
            };
            match table.get(&word) {
                Some(body) => assert_eq!(&r.body, body),
                None => assert!(r.body.is_zero(), "{word}: {}", r.body),
            }
        }
    }
}

#[test]
fn bodies_are_integral_through_weight_six() {
    for k in 2..=6 {
        for r in generate_confluence(k, Mode::Shuffle).unwrap() {
            assert!(r.body.is_integral(), "{}", r.source);
            assert!(SubspaceTag::A0.contains(&r.body));
        }
    }
}

#[test]
fn ranks_match_dimension_conjecture() {
    for k in 2..=7 {
        let recs = generate_confluence(k, Mode::Shuffle).unwrap();
        assert_eq!(recs.len(), 4 * 3usize.pow(k as u32 - 2));
        let basis = span_of(recs.iter().map(|r| &r.body), k).unwrap();
        assert_eq!(basis.rank() as u64, expected_relation_rank(k), "weight {k}");
    }
}

#[test]
fn double_shuffle_and_duality_lie_in_confluence_span() {
    for k in 3..=6 {
        let basis = confluence_span(k, Mode::Shuffle);
        for r in generate_rds(k).unwrap() {
            assert!(basis.contains(&to_coords(&r.body, k)), "rds {}", r.source);
        }
        for r in generate_duality(k).unwrap() {
            assert!(
                basis.contains(&to_coords(&r.body, k)),
                "duality {}",
                r.source
            );
        }
    }
}

#[test]
fn single_zeta_value_is_not_a_relation() {
    let basis = confluence_span(3, Mode::Shuffle);
    assert!(!basis.contains(&to_coords(&"100".parse().unwrap(), 3)));
    assert!(basis.contains(&to_coords(&"100 + 110".parse().unwrap(), 3)));
}

#[test]
fn shuffle_and_stuffle_generators_span_the_same_space() {
    for k in 2..=6 {
        let a = confluence_span(k, Mode::Shuffle);
        let b = confluence_span(k, Mode::Stuffle);
        assert_eq!(a.rank(), b.rank(), "weight {k}");
        assert!(b.rows().iter().all(|r| a.contains(r)), "weight {k}");
    }
}

fn to_coords(p: &NCPoly, k: usize) -> Vec<Rational> {
    confluence_core::linalg::to_vector(p, k).unwrap().entries
}

/// Coordinates with respect to an open-ended key set, for maps whose
/// codomain is not a fixed word basis.
#[derive(Default)]
struct Coords {
    keys: BTreeMap<String, usize>,
}

impl Coords {
    fn columns(&mut self, images: &[Vec<(String, Rational)>]) -> Vec<Vec<Rational>> {
        for img in images {
            for (key, _) in img {
                let n = self.keys.len();
                self.keys.entry(key.clone()).or_insert(n);
            }
        }
        images
            .iter()
            .map(|img| {
                let mut col = vec![Rational::zero(); self.keys.len()];
                for (key, c) in img {
                    col[self.keys[key]] += c;
                }
                col
            })
            .collect()
    }
}

fn poly_entries(p: &NCPoly) -> Vec<(String, Rational)> {
    p.terms()
        .map(|(w, c)| (format!("w{w}"), c.clone()))
        .collect()
}

/// Echelon basis of the span of vectors in domain coordinates.
fn span(vectors: &[Vec<Rational>], dim: usize) -> EchelonBasis {
    let mut b = EchelonBasis::new(dim);
    for v in vectors {
        b.insert(v);
    }
    b
}

fn same_space(a: &EchelonBasis, b: &EchelonBasis) -> bool {
    a.rank() == b.rank() && b.rows().iter().all(|r| a.contains(r))
}

/// Kernel of a linear map given by its values on the domain basis.
fn kernel_of(images: &[Vec<(String, Rational)>], dim: usize) -> EchelonBasis {
    span(&kernel(&Coords::default().columns(images)), dim)
}

/// Image of a linear map landing in the domain itself.
fn image_in_domain(images: &[NCPoly], domain: &[Word]) -> EchelonBasis {
    let index: BTreeMap<&Word, usize> = domain.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let vecs: Vec<Vec<Rational>> = images
        .iter()
        .map(|p| {
            let mut v = vec![Rational::zero(); domain.len()];
            for (w, c) in p.terms() {
                v[index[w]] = c.clone();
            }
            v
        })
        .collect();
    span(&vecs, domain.len())
}

fn derivation_constants(w: &Word) -> Vec<(String, Rational)> {
    let mut out = Vec::new();
    let mut frontier = vec![(String::new(), NCPoly::from(w))];
    while let Some((path, q)) = frontier.pop() {
        for (v, c) in const_proj(&q).terms() {
            out.push((format!("{path}:{v}"), c.clone()));
        }
        for (tag, a) in [('0', Letter::Zero), ('1', Letter::One)] {
            let next = derivation(Letter::Z, a, &q);
            if !next.is_zero() {
                frontier.push((format!("{path}{tag}"), next));
            }
        }
    }
    out
}

#[test]
fn six_characterizations_agree() {
    for k in 1..=4 {
        let domain = SubspaceTag::Az0.words_of_weight(k);
        let dim = domain.len();
        let wp: Vec<NCPoly> = domain.iter().map(NCPoly::from).collect();
        let sh: Vec<NCPoly> = wp.iter().map(|p| phi_shuffle(p).unwrap()).collect();
        let st: Vec<NCPoly> = wp.iter().map(|p| phi_stuffle(p).unwrap()).collect();

        let im_sh = image_in_domain(
            &wp.iter().zip(&sh).map(|(p, q)| p - q).collect::<Vec<_>>(),
            &domain,
        );
        let ker_sh = kernel_of(&sh.iter().map(poly_entries).collect::<Vec<_>>(), dim);
        let im_st = image_in_domain(
            &wp.iter().zip(&st).map(|(p, q)| p - q).collect::<Vec<_>>(),
            &domain,
        );
        let ker_st = kernel_of(&st.iter().map(poly_entries).collect::<Vec<_>>(), dim);
        let tensor_images: Vec<Vec<(String, Rational)>> = wp
            .iter()
            .map(|p| {
                let t = phi_tensor(p).unwrap();
                t.iter()
                    .flat_map(|(right, left)| {
                        left.terms()
                            .map(|(l, c)| (format!("{l}|{right}"), c.clone()))
                            .collect::<Vec<_>>()
                    })
                    .collect()
            })
            .collect();
        let ker_tensor = kernel_of(&tensor_images, dim);
        let ker_const = kernel_of(
            &domain.iter().map(derivation_constants).collect::<Vec<_>>(),
            dim,
        );

        for (name, s) in [
            ("ker φ_⧢", &ker_sh),
            ("im id−φ_*", &im_st),
            ("ker φ_*", &ker_st),
            ("ker φ_⊗", &ker_tensor),
            ("derivation constants", &ker_const),
        ] {
            assert!(same_space(&im_sh, s), "weight {k}: {name}");
        }
    }
}
