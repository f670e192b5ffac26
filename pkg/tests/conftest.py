import sys
from fractions import Fraction as F
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repo")


def rationals(max_num=60, max_den=16):
    return st.builds(F, st.integers(-max_num, max_num), st.integers(1, max_den))


def characters(full=False, frame=None):
    from kuzwalls.character import Character

    c3 = rationals() if full else st.none()
    fr = st.just(F(frame)) if frame is not None else rationals(4, 4)
    return st.builds(lambda r, a, b, c, f: Character(r, a, b, c, f),
                     st.integers(-40, 40).map(F), rationals(), rationals(), c3, fr)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n][1])
