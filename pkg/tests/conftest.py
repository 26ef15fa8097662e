import pytest

from drgfeas.core import parse_array

# arrays of the diameter <= 4 classification (theta_min <= -k/2), K_{t,t,t} listed separately
CLASSIFICATION = {
    1: ["2;1"],
    2: ["2,1;1,1", "3,2;1,1", "5,4;1,2", "4,2;1,2", "6,4;1,3", "10,8;1,5"],
    3: [
        "2,1,1;1,1,1", "4,3,3;1,1,2", "5,4,2;1,1,4", "6,5,1;1,1,6", "6,5,2;1,1,3",
        "7,6,5;1,2,3", "7,6,6;1,1,2", "8,7,5;1,1,4", "15,14,12;1,1,9", "21,20,16;1,2,12",
        "4,2,1;1,1,4", "4,2,2;1,1,2", "6,4,2;1,2,3", "6,4,4;1,1,3", "8,6,1;1,3,8",
        "14,12,8;1,3,7", "18,16,16;1,1,9", "24,22,20;1,2,12", "30,28,24;1,3,15",
        "42,40,32;1,5,21",
    ],
    4: [
        "4,2,2,2;1,1,1,2", "6,4,2,1;1,1,4,6", "8,6,4,2;1,2,3,4", "10,8,8,8;1,1,1,5",
        "10,8,8,2;1,1,4,5", "30,28,24,16;1,3,7,15", "170,168,160,128;1,5,21,85",
    ],
}


def tripartite(t):
    return parse_array(f"{2 * t},{t - 1};1,{2 * t}")


def classification_arrays(t_max=5):
    arrs = [parse_array(s) for d in sorted(CLASSIFICATION) for s in CLASSIFICATION[d]]
    arrs += [tripartite(t) for t in range(2, t_max + 1)]
    return sorted(arrs)


@pytest.fixture(scope="session")
def thm12():
    return classification_arrays()


# acceptance criterion number -> PASS/FAIL line, filled by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
