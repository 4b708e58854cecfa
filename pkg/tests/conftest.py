from __future__ import annotations

import pytest

from peersupport.demo import make_separable_corpus
from peersupport.emoclass import make_corpus, train
from peersupport.scaffold import default_phrase_bank
from peersupport.textproc import LanguageProfile, default_profile


@pytest.fixture(scope="session")
def en_profile():
    return default_profile()


@pytest.fixture(scope="session")
def plain_profile():
    """No stopwords, no lemma map: keeps hand-computed arithmetic simple."""
    return LanguageProfile(name="plain")


@pytest.fixture(scope="session")
def bank():
    return default_phrase_bank()


@pytest.fixture(scope="session")
def hand_corpus():
    """Six one-doc classes sized for working the smoothed likelihoods by hand."""
    return make_corpus(
        [
            ("furious furious shouting", "anger"),
            ("weeping", "sadness"),
            ("grinning", "happiness"),
            ("gasp", "surprise"),
            ("trembling", "fear"),
            ("swamped", "distress"),
        ]
    )


@pytest.fixture(scope="session")
def hand_model(hand_corpus, plain_profile):
    return train(hand_corpus, plain_profile)


@pytest.fixture(scope="session")
def separable_model(en_profile):
    corpus = make_separable_corpus(docs_per_label=10, seed=3)
    return train(corpus, en_profile)
