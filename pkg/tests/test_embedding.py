import math

import numpy as np
import pytest

from lambda_spaces import (BlockVector, Bracket, DomainError, ExponentSeq,
                           FiniteSequence, LambdaWeights, embed,
                           isometry_residual, lambda_transform, luxemburg,
                           nakano_luxemburg)

CESARO = LambdaWeights.cesaro()


class TestBlockVector:
    def test_shape_enforced(self):
        with pytest.raises(DomainError):
            BlockVector(((1.0,), (2.0,)))  # block 1 must have 2 entries

    def test_finite_enforced(self):
        with pytest.raises(DomainError):
            BlockVector(((math.nan,),))

    def test_block_l1(self):
        b = BlockVector(((1.0,), (-2.0, 0.5)))
        assert b.count == 2
        assert b.block_l1(1) == 2.5


class TestEmbed:
    def test_basis_blocks(self):
        # e_0 in the cesaro family: block n is (1/(n+1), 0, ..., 0)
        b = embed(FiniteSequence.basis(0), CESARO, 3)
        for n in range(4):
            assert b.blocks[n][0] == pytest.approx(1.0 / (n + 1))
            assert np.all(b.blocks[n][1:] == 0.0)

    def test_block_l1_equals_transform(self):
        rng = np.random.default_rng(4)
        w = LambdaWeights.power(1.5)
        for _ in range(10):
            idx = rng.choice(10, size=4, replace=False)
            x = FiniteSequence(idx, rng.uniform(-5, 5, 4))
            b = embed(x, w, 12)
            for n in range(13):
                assert b.block_l1(n) == \
                    pytest.approx(lambda_transform(x, w, n), abs=1e-13)

    def test_linearity(self):
        x = FiniteSequence([0, 2], [1.0, -3.0])
        y = FiniteSequence([1, 2], [2.0, 1.0])
        bx = embed(x, CESARO, 5)
        by = embed(y, CESARO, 5)
        bxy = embed(x + y, CESARO, 5)
        for n in range(6):
            assert np.allclose(bxy.blocks[n], bx.blocks[n] + by.blocks[n])

    def test_zero(self):
        b = embed(FiniteSequence.zero(), CESARO, 2)
        assert all(b.block_l1(n) == 0.0 for n in range(3))

    def test_negative_range(self):
        with pytest.raises(DomainError):
            embed(FiniteSequence.basis(0), CESARO, -1)


class TestNakanoLuxemburg:
    def test_zero(self):
        b = embed(FiniteSequence.zero(), CESARO, 2)
        assert nakano_luxemburg(b, ExponentSeq.constant(2.0),
                                Bracket(0.0, 0.0)) == Bracket(0.0, 0.0)

    def test_pure_tail_scaling(self):
        # no materialized mass, certified tail T at unit scale: the norm
        # solves (1/r)^p * T = 1, i.e. r = T^(1/p)
        b = embed(FiniteSequence.zero(), CESARO, 1)
        t = 0.37
        br = nakano_luxemburg(b, ExponentSeq.constant(2.0),
                              Bracket(t, t), 1e-12)
        assert br.contains(math.sqrt(t)) or abs(br.mid - math.sqrt(t)) < 1e-10

    def test_prefix_coverage_required(self):
        b = embed(FiniteSequence.basis(0), CESARO, 0)
        pe = ExponentSeq((1.5, 1.5, 1.5), 2.0)
        with pytest.raises(DomainError):
            nakano_luxemburg(b, pe, Bracket(0.1, 0.1))


class TestIsometry:
    def test_basis_examples(self):
        for w in (CESARO, LambdaWeights.power(1.5)):
            for m in (0, 3, 5):
                r = isometry_residual(FiniteSequence.basis(m), w,
                                      ExponentSeq.constant(3.0), m, 1e-10)
                assert r <= 1e-8

    def test_variable_exponents(self):
        pe = ExponentSeq((3.0, 1.4, 2.2), 2.0)
        x = FiniteSequence([0, 1, 4], [2.0, -1.0, 0.5])
        assert isometry_residual(x, CESARO, pe, 4, 1e-10) <= 1e-8

    def test_homogeneity_of_both_routes(self):
        pe = ExponentSeq.constant(2.0)
        x = FiniteSequence([0, 2], [1.0, 1.0])
        for c in (0.25, 4.0):
            assert isometry_residual(x.scale(c), CESARO, pe, 2, 1e-10) <= 1e-8

    def test_zero(self):
        assert isometry_residual(FiniteSequence.zero(), CESARO,
                                 ExponentSeq.constant(2.0), 0) == 0.0

    def test_matches_direct_norm(self):
        # the block route reproduces the direct Luxemburg bracket itself
        pe = ExponentSeq.constant(2.0)
        x = FiniteSequence.basis(0)
        direct = luxemburg(x, CESARO, pe, 1e-10)
        assert direct.contains(math.pi / math.sqrt(6.0))
        assert isometry_residual(x, CESARO, pe, 0, 1e-10) <= 1e-8
