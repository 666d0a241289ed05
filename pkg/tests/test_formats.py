"""Round-trips and rejection behavior of the documented file formats."""

import json
from fractions import Fraction

import pytest

from cubal.cubic import CubicMatrix
from cubal.enumeration import orbit_census
from cubal.errors import FormatError, NotAssociativeError
from cubal.formats import (
    census_from_doc,
    census_to_doc,
    cubic_from_doc,
    cubic_to_doc,
    dump_json,
    expand_census,
    operation_from_doc,
    operation_to_doc,
    parse_operation,
    table_from_text,
    table_to_text,
)
from cubal.operations import Operation
from cubal.scalars import format_scalar, parse_scalar

from conftest import CYCLE3, M2_TABLES


class TestScalars:
    def test_parse_integer_and_fraction(self):
        assert parse_scalar("3") == 3
        assert parse_scalar("-1/2") == Fraction(-1, 2)
        assert parse_scalar(4) == 4

    def test_format_reduced(self):
        assert format_scalar(Fraction(2, 4)) == "1/2"
        assert format_scalar(Fraction(-3)) == "-3"
        assert format_scalar(7) == "7"

    def test_round_trip(self):
        for s in ("0", "5", "-7/3", "22/7"):
            assert format_scalar(parse_scalar(s)) == s

    def test_bad_scalars_rejected(self):
        for bad in ("1/0", "a", "", None, 1.5):
            with pytest.raises(FormatError):
                parse_scalar(bad)


class TestOperationFormats:
    def test_json_round_trip(self):
        op = Operation(CYCLE3)
        assert operation_from_doc(operation_to_doc(op)) == op

    def test_text_round_trip(self):
        op = Operation(CYCLE3)
        assert table_from_text(table_to_text(op)) == op

    def test_parse_sniffs_json(self):
        op = Operation(M2_TABLES[1])
        assert parse_operation(json.dumps(operation_to_doc(op))) == op
        assert parse_operation(table_to_text(op)) == op

    def test_non_associative_rejected_without_escape(self):
        text = "2\n2 1\n1 1\n"
        with pytest.raises(NotAssociativeError):
            table_from_text(text)
        got = table_from_text(text, unchecked=True)
        assert got(1, 1) == 2

    def test_malformed_documents_rejected(self):
        with pytest.raises(FormatError):
            operation_from_doc({"m": 2})
        with pytest.raises(FormatError):
            operation_from_doc({"m": 3, "table": [[1, 1], [1, 1]]})
        with pytest.raises(FormatError):
            table_from_text("2\n1 1\n")
        with pytest.raises(FormatError):
            table_from_text("not a table\n")
        with pytest.raises(FormatError):
            parse_operation("{broken json")


class TestCubicFormats:
    def test_round_trip(self):
        x = CubicMatrix(
            2,
            [Fraction(n, d) for n, d in [(1, 1), (0, 1), (-1, 2), (3, 1), (0, 1), (5, 7), (2, 3), (-4, 1)]],
        )
        assert cubic_from_doc(cubic_to_doc(x)) == x

    def test_doc_uses_fraction_strings(self):
        doc = cubic_to_doc(CubicMatrix(1, (Fraction(-1, 2),)))
        assert doc == {"m": 1, "entries": [[["-1/2"]]]}

    def test_shape_mismatch_rejected(self):
        with pytest.raises(FormatError):
            cubic_from_doc({"m": 2, "entries": [[["1"]]]})


class TestCensusFormats:
    def test_round_trip(self, orbits2):
        doc = census_to_doc(orbits2)
        back = census_from_doc(doc)
        assert back == orbits2

    def test_doc_shape(self, orbits2):
        doc = census_to_doc(orbits2)
        assert doc["m"] == 2
        assert doc["total"] == 8
        assert doc["orbit_count"] == 5
        assert {o["size"] for o in doc["orbits"]} == {1, 2}

    def test_expansion_regenerates_the_census(self, orbits2, census2):
        assert expand_census(orbits2) == census2

    def test_expansion_m3(self, orbits3, census3):
        assert expand_census(orbits3) == census3

    def test_inconsistent_doc_rejected(self, orbits2):
        doc = census_to_doc(orbits2)
        doc["total"] = 9
        with pytest.raises(FormatError):
            census_from_doc(doc)
        doc["total"] = 8
        doc["orbit_count"] = 4
        with pytest.raises(FormatError):
            census_from_doc(doc)


class TestDumpJson:
    def test_deterministic_and_newline_terminated(self):
        doc = {"b": 1, "a": [2, 3]}
        text = dump_json(doc)
        assert text == dump_json({"a": [2, 3], "b": 1})
        assert text.endswith("\n")
        assert json.loads(text) == doc
