import pytest

from emolabel import Corpus, Sentiment, Tweet, load_lexicon

POS, NEU, NEG = Sentiment.POSITIVE, Sentiment.NEUTRAL, Sentiment.NEGATIVE


@pytest.fixture(scope="session")
def lex():
    return load_lexicon()


def make_corpus(texts, golds=None, name="t"):
    golds = golds or [None] * len(texts)
    return Corpus(tuple(Tweet(str(i), t, None, g) for i, (t, g) in enumerate(zip(texts, golds))), name)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
