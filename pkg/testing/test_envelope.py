from fractions import Fraction

from hypothesis import given
import hypothesis.strategies as st

from model.envelope import OutputEnvelope, exact_str, format_sig, parse_exact, round_sig


def test_exact_strings():
    assert exact_str(Fraction(2, 6)) == "1/3"
    assert exact_str(0) == "0/1"
    assert exact_str(Fraction(-5, 1)) == "-5/1"
    assert parse_exact("1/18") == Fraction(1, 18)


@given(st.fractions())
def test_exact_string_parses_back(value):
    assert parse_exact(exact_str(value)) == value


def test_significant_digits():
    assert format_sig(0.6, 4) == "0.6000"
    assert format_sig(1.98, 4) == "1.980"
    assert format_sig(0.008107171, 4) == "0.008107"
    assert round_sig(0.923456, 4) == 0.9235


def test_envelope_json_round_trip():
    envelope = OutputEnvelope(command='moments', parameters={'n_min': 2, 'n_max': 2, 'digits': 4})
    envelope.exact_values.append({'n': 2, 'first_moment': "1/3"})
    envelope.float_values.append({'n': 2, 'first_moment': 0.3333})
    envelope.results['rows'] = 1
    text = envelope.to_json()
    assert OutputEnvelope.from_json(text) == envelope
    assert '"format_version": 1' in text


def test_envelope_csv():
    envelope = OutputEnvelope(command='moments', parameters={})
    envelope.exact_values = [{'n': 4, 'second_moment': "3/5"}]
    envelope.float_values = [{'n': 4, 'second_moment': 0.6}]
    envelope.results = {'rows': 1, 'gap': None, 'diagonal': ["0/1", "1/3"],
                        'histogram': [{'bin_left': 0.0, 'count': 3}]}
    lines = envelope.to_csv(4).splitlines()
    assert lines == [
        "# gap=",
        "# rows=1",
        "n,second_moment,second_moment_float",
        "4,3/5,0.6000",
        "",
        "# section=diagonal",
        "diagonal",
        "0/1",
        "1/3",
        "",
        "# section=histogram",
        "bin_left,count",
        "0.000,3",
    ]


def test_empty_list_result_keeps_its_section():
    envelope = OutputEnvelope(command='verify', parameters={}, results={'notes': []})
    envelope.exact_values = [{'suite': 'moment table', 'passed': True}]
    assert envelope.to_csv(4).endswith("\n# section=notes\nnotes\n")
