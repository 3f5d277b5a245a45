use std::collections::{BTreeMap, BTreeSet};

use rrcrystal::reference::{
    coefficients, congruence_rows, initial_conditions, published_matrix, specialization_products,
};
use rrcrystal_core::productside::specialized_d;
use rrcrystal_core::rootsystem::{affine_config, level_one, principal};
use rrcrystal_core::{
    difference_matrix, normalized_character_series, product_side_series, AffineType, SumSideModel,
};

const N: usize = 60;

#[test]
fn matrices_match_published_cell_for_cell() {
    for t in [AffineType::D4_3, AffineType::G2_1, AffineType::E6_2] {
        let want = published_matrix(t).unwrap();
        let got = difference_matrix(t).unwrap();
        assert_eq!(got.order(), want.order(), "{t} order");
        for r in 0..want.size() {
            for c in 0..want.size() {
                assert_eq!(
                    got.get(r, c),
                    want.get(r, c),
                    "{t} F({} (x) {})",
                    want.order()[r],
                    want.order()[c]
                );
            }
        }
    }
}

#[test]
fn congruence_rows_match_as_sets() {
    for t in AffineType::ALL {
        let model = SumSideModel::new(t).unwrap();
        let (modulus, want) = congruence_rows(t);
        assert_eq!(modulus, model.ht_delta(), "{t}");
        let got: BTreeMap<u32, BTreeSet<_>> = model
            .congruence_table()
            .into_iter()
            .map(|(r, bs)| (r, bs.into_iter().collect()))
            .collect();
        assert_eq!(got, want, "{t}");
    }
}

#[test]
fn forbidden_parts_match() {
    for t in AffineType::ALL {
        let model = SumSideModel::new(t).unwrap();
        let mut want = initial_conditions(t);
        want.sort();
        assert_eq!(model.positive_forbidden_parts(), want, "{t}");
    }
}

#[test]
fn sum_and_product_match_published_coefficients() {
    for t in AffineType::ALL {
        let d = SumSideModel::new(t).unwrap().count_d_series(N).unwrap();
        let c = product_side_series(t, N).unwrap();
        for (p, &want) in (1..=N).zip(coefficients(t)) {
            assert_eq!(d[p], want, "{t} d({p})");
            assert_eq!(c.coeff(p), want as i128, "{t} c({p})");
        }
    }
}

#[test]
fn specialisations_match_closed_forms() {
    for t in AffineType::ALL {
        let forms = specialization_products(t);
        let dual = affine_config(t).dual;
        let dc = affine_config(dual);
        let f1 = specialized_d(dual, &principal(&dc), N).unwrap();
        let f2 = specialized_d(dual, &level_one(&dc), N).unwrap();
        assert_eq!(f1, forms.principal.expand(N).unwrap(), "{t} principal");
        assert_eq!(f2, forms.level_one.expand(N).unwrap(), "{t} level one");
        let ch = normalized_character_series(t, N).unwrap();
        assert_eq!(ch, forms.character.expand(N).unwrap(), "{t} character");
    }
}

#[test]
fn specific_examples() {
    assert_eq!(coefficients(AffineType::D4_3)[59], 13032);
    let d4 = SumSideModel::new(AffineType::D4_3).unwrap();
    let parts: Vec<String> = d4
        .positive_forbidden_parts()
        .iter()
        .map(|p| p.to_string())
        .collect();
    assert_eq!(parts, ["1^-10", "2^-11", "3^-21"]);
}
