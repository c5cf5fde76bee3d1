"""Tests for stabilizer codes."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transversal_class.code import (
    PauliString,
    StabilizerCode,
    distance,
    dual,
    is_css,
    is_gf4_linear,
    is_self_dual_code,
    is_semi_self_dual,
    parse_code,
    qubit_weight,
    random_code,
    read_code,
    render,
    transform,
)
from transversal_class.corpus import BUILTIN_CODES, get_code
from transversal_class.endo.algebra import invariant_under
from transversal_class.errors import (
    AnticommutingGeneratorsError,
    DistanceCapError,
    NoLogicalOperatorsError,
    StabParseError,
)
from transversal_class.f2core import F2Matrix, F2Vector, RowSpace, invert
from transversal_class.symplectic import sp2_elements


@st.composite
def random_codes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    dim = draw(st.integers(0, n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_code(n, dim, seed)


class TestPauliString:
    """Tests for Pauli string encoding."""

    def test_letters(self):
        """Test I, X, Z and Y encodings."""
        assert PauliString("I").to_bits() == 0b00
        assert PauliString("X").to_bits() == 0b01
        assert PauliString("Z").to_bits() == 0b10
        assert PauliString("Y").to_bits() == 0b11

    def test_interleaved_vector(self):
        """Test the interleaved (x, z) layout."""
        assert PauliString("XZ").to_vector().to_list() == [1, 0, 0, 1]

    def test_from_bits(self):
        """Test decoding back to letters."""
        assert str(PauliString.from_bits(0b11_10_01_00, 4)) == "IXZY"
        assert PauliString.from_vector(F2Vector.from_bits([1, 1, 0, 0])).letters == "YI"

    def test_weight(self):
        """Test the qubit weight."""
        assert PauliString("XIZY").weight == 3
        assert qubit_weight(PauliString("XIZY").to_bits(), 4) == 3

    def test_invalid_letter(self):
        """Test that unknown letters are rejected."""
        with pytest.raises(StabParseError):
            PauliString("XW")


class TestParseCode:
    """Tests for .stab parsing."""

    def test_422(self):
        """Test the [[4,2,2]] code."""
        code = parse_code("XXXX\nZZZZ")
        assert (code.n, code.dim, code.k) == (4, 2, 2)

    def test_duplicate_generator(self):
        """Test that dependent generators are reduced away."""
        code = parse_code("XXXX\nXXXX")
        assert (code.dim, code.k) == (1, 3)

    def test_anticommuting_generators(self):
        """Test that anticommuting generators are rejected with line numbers."""
        with pytest.raises(AnticommutingGeneratorsError) as excinfo:
            parse_code("XI\n# comment\nZI\n")
        assert excinfo.value.first_line == 1
        assert excinfo.value.second_line == 3
        assert "XI" in str(excinfo.value)

    def test_doubly_anticommuting_pair_commutes(self):
        """Test that XZ and ZX commute and are accepted."""
        assert parse_code("XZ\nZX").dim == 2

    def test_bad_character(self):
        """Test the position of a bad character."""
        with pytest.raises(StabParseError) as excinfo:
            parse_code("XXXX\nZZQZ")
        assert excinfo.value.line == 2
        assert excinfo.value.column == 3

    def test_bad_character_after_indent(self):
        """Test that columns count leading whitespace on the raw line."""
        with pytest.raises(StabParseError) as excinfo:
            parse_code("  XQ")
        assert excinfo.value.column == 4
        assert "column 4" in str(excinfo.value)

    def test_read_code(self, tmp_path):
        """Test reading a .stab file from disk."""
        path = tmp_path / "422.stab"
        path.write_text("# [[4,2,2]]\nXXXX\nZZZZ\n")
        assert read_code(str(path)) == get_code("422")

    def test_ragged_lines(self):
        """Test that all lines must have the same length."""
        with pytest.raises(StabParseError) as excinfo:
            parse_code("XXXX\nZZZ")
        assert excinfo.value.line == 2

    def test_empty(self):
        """Test that input without generators is rejected."""
        with pytest.raises(StabParseError):
            parse_code("# nothing\n\n")

    def test_comments_and_blank_lines(self):
        """Test that comments and blank lines are skipped."""
        code = parse_code("# header\n\nXXXX  # x check\n\nZZZZ\n")
        assert code == parse_code("XXXX\nZZZZ")

    def test_identity_line(self):
        """Test that an all-identity line gives the trivial code."""
        code = parse_code("I")
        assert (code.n, code.dim, code.k) == (1, 0, 1)

    def test_from_paulis(self):
        """Test the convenience constructor."""
        assert StabilizerCode.from_paulis(["XXXX", "ZZZZ"]) == parse_code("XXXX\nZZZZ")

    def test_constructor_checks_isotropy(self):
        """Test that a non-isotropic space is rejected."""
        space = RowSpace.from_bit_rows([0b01, 0b10], 2)
        with pytest.raises(AnticommutingGeneratorsError):
            StabilizerCode(1, space)

    @pytest.mark.parametrize("name", list(BUILTIN_CODES))
    def test_render_round_trip(self, name):
        """Test parse -> render -> parse on the corpus."""
        code = get_code(name)
        assert parse_code(render(code)).space == code.space

    @given(random_codes())
    def test_render_round_trip_random(self, code):
        """Test parse -> render -> parse on random codes."""
        assert parse_code(render(code)).space == code.space


class TestDual:
    """Tests for the symplectic dual."""

    def test_422(self):
        """Test the dual of the [[4,2,2]] code."""
        code = get_code("422")
        d = dual(code)
        assert d.dim == 6
        assert code.space.issubset(d)

    def test_lagrangian(self):
        """Test that a maximal isotropic code is its own dual."""
        code = parse_code("XX\nZZ")
        assert dual(code) == code.space

    def test_trivial_code(self):
        """Test that the dual of {0} is everything."""
        assert dual(parse_code("I")).dim == 2

    @given(random_codes())
    def test_dimension_and_containment(self, code):
        """Test dim(C) + dim(dual) = 2n and C inside its dual."""
        d = dual(code)
        assert code.dim + d.dim == 2 * code.n
        assert code.space.issubset(d)


class TestDistance:
    """Tests for brute-force distance."""

    @pytest.mark.parametrize(("name", "d"), [("422", 2), ("513", 3), ("612", 2), ("generic3", 1)])
    def test_corpus(self, name, d):
        """Test the distances of corpus codes."""
        assert distance(get_code(name)) == d

    def test_lagrangian_has_no_logicals(self):
        """Test that k = 0 is an error."""
        with pytest.raises(NoLogicalOperatorsError):
            distance(parse_code("XX\nZZ"))

    def test_cap(self):
        """Test the enumeration guard."""
        with pytest.raises(DistanceCapError) as excinfo:
            distance(get_code("422"), max_n=3)
        assert excinfo.value.n == 4


class TestPredicates:
    """Tests for CSS, self-dual, GF(4)-linear and semi-self-dual predicates."""

    def test_422(self):
        """Test the [[4,2,2]] code."""
        code = get_code("422")
        assert (is_css(code), is_self_dual_code(code), is_gf4_linear(code)) == (True, True, True)
        assert is_semi_self_dual(code)

    def test_513(self):
        """Test the [[5,1,3]] code."""
        code = get_code("513")
        assert (is_css(code), is_self_dual_code(code), is_gf4_linear(code)) == (
            False,
            False,
            True,
        )
        assert not is_semi_self_dual(code)

    def test_self_dual_non_css(self):
        """Test the self-dual non-CSS code."""
        code = get_code("selfdual4")
        assert (is_css(code), is_self_dual_code(code), is_gf4_linear(code)) == (
            False,
            True,
            False,
        )

    @pytest.mark.parametrize("name", list(BUILTIN_CODES))
    def test_agree_with_invariance(self, name):
        """Test that predicates are invariance under their generating matrices."""
        code = get_code(name)
        projector = F2Matrix.from_rows([[1, 0], [0, 0]])
        hadamard = F2Matrix.from_rows([[0, 1], [1, 0]])
        facet = F2Matrix.from_rows([[1, 1], [1, 0]])
        assert is_css(code) == invariant_under(code, projector)
        assert is_self_dual_code(code) == invariant_under(code, hadamard)
        assert is_gf4_linear(code) == invariant_under(code, facet)


class TestTransform:
    """Tests for the local Clifford action C -> C . R."""

    def test_identity(self):
        """Test that the identity fixes every code."""
        code = get_code("513")
        assert transform(code, F2Matrix.identity(2)) == code

    def test_hadamard_on_css_part(self):
        """Test that H swaps X and Z stabilizers."""
        code = parse_code("XXII\nIIZZ")
        swapped = transform(code, F2Matrix.from_rows([[0, 1], [1, 0]]))
        assert swapped == parse_code("ZZII\nIIXX")

    @settings(max_examples=30)
    @given(random_codes())
    def test_inverse_undoes(self, code):
        """Test that transforming by R and then R^-1 restores the code."""
        for r in sp2_elements():
            assert transform(transform(code, r), invert(r)) == code


class TestRandomCode:
    """Tests for the random code sampler."""

    def test_deterministic(self):
        """Test that a seed fixes the sample."""
        assert random_code(5, 3, 7) == random_code(5, 3, 7)

    def test_shape(self):
        """Test the requested parameters."""
        code = random_code(6, 4, 1)
        assert (code.n, code.dim, code.k) == (6, 4, 2)

    def test_invalid_dim(self):
        """Test that dim must not exceed n."""
        with pytest.raises(ValueError):
            random_code(2, 3)
