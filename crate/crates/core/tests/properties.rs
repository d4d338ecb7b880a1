mod common;

#[test]
fn loops_are_sound_and_splice_monotone() {
    common::loops_are_sound_and_splice_monotone();
}

#[test]
fn no_embedding_is_final() {
    common::no_embedding_is_final();
}

#[test]
fn membership_implications_and_duality() {
    common::membership_implications_and_duality();
}

#[test]
fn homological_lemmas_have_no_violations() {
    common::homological_lemmas_have_no_violations();
}
