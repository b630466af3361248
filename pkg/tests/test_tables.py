"""Tests for the text, CSV and JSON emitters."""

import csv
import io
import json

import pytest
from sympy import Rational

from app.counting.asymptotics import AsymptoticExpansion, SubexpRow
from app.counting.methods import CountTable
from app.tables import emit_count_table, emit_expansion, emit_subexp, format_sci


@pytest.fixture
def table():
    t = CountTable()
    for n, value in enumerate([1, 1, 2, 5], start=1):
        t.set("rec", n, value)
    t.set("sum", 1, 1)
    return t


@pytest.fixture
def expansion():
    return AsymptoticExpansion(
        lam=Rational(8),
        theta=Rational(-7),
        corrections=(Rational(-28), Rational(4102, 9)),
        K=6686.408973,
    )


class TestCountTable:
    """Test count table output."""

    def test_csv(self, table):
        rows = list(csv.reader(io.StringIO(emit_count_table(table, "csv"))))
        assert rows[0] == ["n", "rec", "sum"]
        assert rows[1] == ["1", "1", "1"]
        assert rows[4] == ["4", "5", ""], "Missing cells should be blank"

    def test_json_counts_are_strings(self, table):
        payload = json.loads(emit_count_table(table, "json"))
        assert payload["columns"] == ["rec", "sum"]
        assert payload["rows"][3] == {"n": 4, "rec": "5", "sum": ""}

    def test_text_alignment(self, table):
        lines = emit_count_table(table, "text").splitlines()
        assert lines[0].split() == ["n", "rec", "sum"]
        assert set(lines[1].replace(" ", "")) == {"-"}
        assert len({len(line) for line in lines}) == 1, "Text columns should be aligned"

    def test_unknown_format(self, table):
        with pytest.raises(ValueError, match="Unknown output format"):
            emit_count_table(table, "xml")


class TestExpansionOutput:
    """Test asymptotic report output."""

    def test_format_sci(self):
        assert format_sci(6.507e-18) == "6.507e-18"
        assert format_sci(5.0881e-11) == "5.088e-11"

    def test_json(self, expansion):
        rows = [SubexpRow(21, 1.479e-6, 1.726e-7, True)]
        payload = json.loads(emit_expansion(expansion, rows, "json"))
        assert payload["lambda"] == "8"
        assert payload["corrections"] == ["-28", "4102/9"]
        assert payload["K"] == pytest.approx(6686.408973)
        assert payload["table"] == [
            {"n": 21, "exact_ratio": "1.479e-06", "g": "1.726e-07", "flagged": True}
        ]

    def test_csv(self, expansion):
        rows = list(csv.reader(io.StringIO(emit_expansion(expansion, fmt="csv"))))
        assert rows[0] == ["quantity", "value"]
        assert rows[1] == ["lambda", "8"]
        assert rows[3] == ["c1", "-28"]
        assert rows[-1] == ["K", "6686.408973"]

    def test_subexp_text(self):
        rows = [SubexpRow(101, 5.088e-11, 5.081e-11, False)]
        text = emit_subexp(rows, "text")
        assert "5.088e-11" in text
        assert text.splitlines()[-1].split()[-1] == "no"
