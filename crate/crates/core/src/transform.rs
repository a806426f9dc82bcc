//! Structural transforms on preferences.

use crate::error::{Error, Result};
use crate::preference::Preference;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transform {
    /// `a_i ↦ a_i - w`, lot shrinks to `s - w`.
    Translate(usize),
    /// Keep the cars at these 1-based positions, in their original order.
    Restrict(Vec<usize>),
    /// `a_i ↦ s - a_i + 2`; needs no car preferring spot 1.
    ReflectTheta,
    /// `a_i ↦ s + 1 - a_i`.
    Complement,
    SortAsc,
    SortDesc,
}

pub fn transform(alpha: &Preference, kind: &Transform) -> Result<Preference> {
    let s = alpha.spots();
    let a = alpha.prefs();
    match kind {
        Transform::Translate(w) => {
            let least = a.iter().copied().min().unwrap_or(s + 1);
            if *w >= least || *w > s {
                return Err(Error::BadTranslation { shift: *w, least });
            }
            if a.len() > s - w {
                return Err(Error::TooManyCars { cars: a.len(), spots: s - w });
            }
            Ok(Preference::from_parts(a.iter().map(|x| x - w).collect(), s - w))
        }
        Transform::Restrict(positions) => {
            let mut j = positions.clone();
            j.sort_unstable();
            j.dedup();
            if let Some(&bad) = j.iter().find(|&&x| x == 0 || x > a.len()) {
                return Err(Error::BadPosition { position: bad, cars: a.len() });
            }
            Ok(Preference::from_parts(j.iter().map(|&x| a[x - 1]).collect(), s))
        }
        Transform::ReflectTheta => {
            if a.contains(&1) {
                return Err(Error::PrefersSpotOne);
            }
            Ok(Preference::from_parts(a.iter().map(|x| s + 2 - x).collect(), s))
        }
        Transform::Complement => Ok(Preference::from_parts(a.iter().map(|x| s + 1 - x).collect(), s)),
        Transform::SortAsc => {
            let mut v = a.to_vec();
            v.sort_unstable();
            Ok(Preference::from_parts(v, s))
        }
        Transform::SortDesc => {
            let mut v = a.to_vec();
            v.sort_unstable_by(|x, y| y.cmp(x));
            Ok(Preference::from_parts(v, s))
        }
    }
}

/// `τ_w(α|_J)`: restrict to `positions`, then translate by `w`, on a lot of
/// `|J|` spots.
pub fn restrict_translate(alpha: &Preference, positions: &[usize], w: usize) -> Result<Preference> {
    let r = transform(alpha, &Transform::Restrict(positions.to_vec()))?;
    let prefs: Vec<usize> = r
        .prefs()
        .iter()
        .map(|&x| if x > w { Ok(x - w) } else { Err(Error::BadTranslation { shift: w, least: x }) })
        .collect::<Result<_>>()?;
    let spots = prefs.len();
    Preference::new(prefs, spots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deficiency::DeficiencyProfile;

    fn p(v: &[usize]) -> Preference {
        Preference::full(v.to_vec()).unwrap()
    }

    #[test]
    fn restrict_then_translate() {
        let a = p(&[4, 4, 3, 2, 3]);
        let r = restrict_translate(&a, &[1, 2], 3).unwrap();
        assert_eq!(r.prefs(), &[1, 1]);
        assert_eq!(r.spots(), 2);
    }

    #[test]
    fn zero_translation_is_identity() {
        let a = p(&[5, 3, 3, 5, 4]);
        assert_eq!(transform(&a, &Transform::Translate(0)).unwrap(), a);
        assert!(transform(&a, &Transform::Translate(3)).is_err());
        assert!(transform(&a, &Transform::Translate(2)).is_err());
        let b = Preference::new(vec![5, 3, 5], 5).unwrap();
        let t = transform(&b, &Transform::Translate(2)).unwrap();
        assert_eq!((t.prefs(), t.spots()), (&[3, 1, 3][..], 3));
    }

    #[test]
    fn reflect_theta_is_an_involution() {
        // U = [2, 2] with n = 4, k = 1
        let a = p(&[2, 2, 4, 3]);
        assert_eq!(DeficiencyProfile::of(&a).u_set(), vec![2]);
        let once = transform(&a, &Transform::ReflectTheta).unwrap();
        assert_eq!(transform(&once, &Transform::ReflectTheta).unwrap(), a);
        assert!(transform(&p(&[1, 2]), &Transform::ReflectTheta).is_err());
    }

    #[test]
    fn sorts_and_complement() {
        let a = p(&[3, 1, 2]);
        assert_eq!(transform(&a, &Transform::SortAsc).unwrap().prefs(), &[1, 2, 3]);
        assert_eq!(transform(&a, &Transform::SortDesc).unwrap().prefs(), &[3, 2, 1]);
        assert_eq!(transform(&a, &Transform::Complement).unwrap().prefs(), &[1, 3, 2]);
    }
}
