from pathlib import Path

import numpy as np
from django.test import SimpleTestCase, override_settings

from algebra.algebras import make_algebra
from algebra.serializers import ElementSerializer
from core.serializers import deserialize, serialize
from cp_maps.maps import transpose_map
from cp_maps.serializers import MapSerializer
from generators.maps import random_order_zero
from order_zero.serializers import DecompositionSerializer
from . import CommandTestCaseHelperMixin


class CheckCpTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for the ``check_cp`` command and the exit code contract.
    """

    def test_identity(self):
        code, report = self.call('check_cp', self.write_map('id.json', self.scaled_identity(1.0)))
        self.assertEqual(code, 0)
        self.assertEqual(report['verdict'], 'pass')
        self.assertAlmostEqual(report['residuals']['choi_min_eigenvalue'], 0.0)
        self.assertNotIn('reason', report)

    def test_transpose(self):
        code, report = self.call('check_cp', self.write_map('t.json', transpose_map(make_algebra([2]))))
        self.assertEqual(code, 1)
        self.assertEqual(report['verdict'], 'fail')
        self.assertEqual(report['reason'], 'NotCompletelyPositive')
        self.assertAlmostEqual(report['residuals']['choi_min_eigenvalue'], -1.0)

    def test_truncated_file(self):
        path = self.write_map('id.json', self.scaled_identity(1.0))
        text = Path(path).read_text()
        Path(path).write_text(text[:len(text) // 2])
        code, report = self.call('check_cp', path)
        self.assertEqual(code, 2)
        self.assertEqual(report['verdict'], 'error')
        self.assertEqual(report['reason'], 'SchemaError')

    def test_missing_file(self):
        code, report = self.call('check_cp', self.path('missing.json'))
        self.assertEqual((code, report['reason']), (2, 'SchemaError'))

    def test_wrong_shapes(self):
        document = serialize(MapSerializer, self.scaled_identity(1.0))
        document['domain'] = {'blocks': [3]}
        code, report = self.call('check_cp', self.write_document('bad.json', document))
        self.assertEqual((code, report['reason']), (2, 'SchemaError'))

    def test_non_finite_entries(self):
        for name in ('check_cp', 'check_oz'):
            for value in (float('nan'), float('inf')):
                with self.subTest(command=name, value=value):
                    document = serialize(MapSerializer, self.scaled_identity(1.0))
                    document['images'][0][0][0]['blocks'][0][0][0] = [value, 0.0]
                    code, report = self.call(name, self.write_document('bad.json', document))
                    self.assertEqual((code, report['verdict'], report['reason']), (2, 'error', 'SchemaError'))
                    self.assertIn('Expected finite numbers', report['message'])

    def test_non_finite_tolerance(self):
        path = self.write_map('id.json', self.scaled_identity(1.0))
        for value in ('nan', 'inf'):
            with self.subTest(value=value):
                code, report = self.call('check_cp', path, '--tol', value)
                self.assertEqual((code, report['reason']), (2, 'InvalidArgument'))

    @override_settings(OZKIT={'TOL': -1.0, 'EPS_RANK': 1e-7, 'SEED': 0, 'WITNESS_SAMPLES': 64})
    def test_negative_tolerance(self):
        code, report = self.call('check_cp', self.write_map('id.json', self.scaled_identity(1.0)))
        self.assertEqual((code, report['reason']), (2, 'InvalidArgument'))

    def test_timing(self):
        path = self.write_map('id.json', self.scaled_identity(1.0))
        self.assertNotIn('timing_ms', self.call('check_cp', path)[1])
        self.assertGreaterEqual(self.call('check_cp', path, '--timing')[1]['timing_ms'], 0.0)


class CheckOzTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for the ``check_oz`` command.
    """

    def test_generated_order_zero_maps(self):
        for seed in self.seeds(10):
            with self.subTest(seed=seed):
                code, report = self.call('check_oz', self.write_map('oz.json', self.order_zero_map(seed)))
                self.assertEqual(code, 0)
                self.assertIn('multiplicativity', report['residuals'])

    def test_compression_with_witness(self):
        path = self.write_map('v.json', self.compression(np.diag([1.0, 0.5])))
        code, report = self.call('check_oz', path, '--witness')
        self.assertEqual(code, 1)
        self.assertEqual(report['reason'], 'NotOrderZero')
        self.assertGreater(report['witness']['violation'], 1e-8)
        self.assertEqual(set(report['witness']), {'a', 'b', 'violation'})

    def test_compression_without_witness(self):
        code, report = self.call('check_oz', self.write_map('v.json', self.compression(np.diag([1.0, 0.5]))))
        self.assertEqual(code, 1)
        self.assertNotIn('witness', report)

    def test_not_completely_positive(self):
        code, report = self.call('check_oz', self.write_map('t.json', transpose_map(make_algebra([2]))))
        self.assertEqual((code, report['reason']), (1, 'NotCompletelyPositive'))

    def test_rescaled_map(self):
        code, report = self.call('check_oz', self.write_map('2id.json', self.scaled_identity(2.0)))
        self.assertEqual(code, 0)
        self.assertAlmostEqual(report['residuals']['scale'], 0.5)


class DecomposeTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for the ``decompose`` command.
    """

    def test_half_identity(self):
        code, report = self.call('decompose', self.write_map('half.json', self.scaled_identity(0.5)),
                                 '-o', self.path('d.json'))
        self.assertEqual(code, 0)
        self.assertNotIn('result', report)
        decomposition = deserialize(DecompositionSerializer, self.read_document('d.json'))
        self.assertElementsClose(decomposition.h, self.diagonal(0.5, 0.5))
        self.assertMapsClose(decomposition.pi, self.scaled_identity(1.0))

    def test_round_trip(self):
        for seed in self.seeds(10):
            with self.subTest(seed=seed):
                phi = self.order_zero_map(seed)
                code, _ = self.call('decompose', self.write_map('oz.json', phi), '-o', self.path('d.json'))
                self.assertEqual(code, 0)
                decomposition = deserialize(DecompositionSerializer, self.read_document('d.json'))
                self.assertMapsClose(decomposition.reconstruct(), phi)

    def test_result_in_report_without_output(self):
        code, report = self.call('decompose', self.write_map('e.json', self.diagonal_embedding(0.3, 0.7)))
        self.assertEqual(code, 0)
        decomposition = deserialize(DecompositionSerializer, report['result'])
        self.assertElementsClose(decomposition.h, self.diagonal(0.3, 0.7, 0))

    def test_compression_leaves_no_file(self):
        code, report = self.call('decompose', self.write_map('v.json', self.compression(np.diag([1.0, 0.5]))),
                                 '-o', self.path('d.json'))
        self.assertEqual((code, report['reason']), (1, 'NotOrderZero'))
        self.assertFalse(Path(self.path('d.json')).exists())
        self.assertEqual([p.name for p in self.directory.iterdir()], ['v.json'])
        self.assertGreater(report['residuals']['adjoint'], 1e-8)
        self.assertEqual(set(report['witness']), {'a', 'b', 'violation'})
        self.assertGreater(report['witness']['violation'], 1e-8)


class MapCommandsTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for ``fcalc``, ``tensor`` and ``amplify``.
    """

    def load_result(self, report):
        return deserialize(MapSerializer, report['result'])

    def test_fcalc_square(self):
        code, report = self.call('fcalc', self.write_map('half.json', self.scaled_identity(0.5)), '--poly', '0,1')
        self.assertEqual(code, 0)
        self.assertMapsClose(self.load_result(report), self.scaled_identity(0.25))

    def test_fcalc_malformed_polynomial(self):
        code, report = self.call('fcalc', self.write_map('half.json', self.scaled_identity(0.5)), '--poly', '1,x')
        self.assertEqual((code, report['reason']), (2, 'InvalidArgument'))

    def test_tensor(self):
        code, report = self.call('tensor', self.write_map('a.json', self.scaled_identity(0.5)),
                                 self.write_map('b.json', self.scaled_identity(0.3, dims=(1,))))
        self.assertEqual(code, 0)
        self.assertMapsClose(self.load_result(report), self.scaled_identity(0.15))

    def test_amplify(self):
        code, report = self.call('amplify', self.write_map('half.json', self.scaled_identity(0.5)), '-k', '2')
        self.assertEqual(code, 0)
        self.assertMapsClose(self.load_result(report), self.scaled_identity(0.5, dims=(4,)))

    def test_amplify_invalid_level(self):
        code, report = self.call('amplify', self.write_map('half.json', self.scaled_identity(0.5)), '-k', '0')
        self.assertEqual((code, report['reason']), (2, 'InvalidArgument'))


class CuntzCommandsTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for ``cuntz`` and ``cuntz_map``.
    """

    def write_element(self, name, element):
        return self.write_document(name, serialize(ElementSerializer, element))

    def test_class(self):
        code, report = self.call('cuntz', self.write_element('a.json', self.diagonal(1, 0.5, 0)))
        self.assertEqual(code, 0)
        self.assertEqual(report['result']['first'], {'algebra': {'blocks': [3]}, 'k': 1, 'ranks': [2]})

    def test_witness(self):
        code, report = self.call('cuntz', self.write_element('a.json', self.diagonal(1, 0)),
                                 self.write_element('b.json', self.diagonal(1, 1)))
        self.assertEqual(code, 0)
        self.assertLessEqual(report['residuals']['witness'], 1e-12)
        self.assertEqual(report['result']['second']['ranks'], [2])

    def test_not_subequivalent(self):
        code, report = self.call('cuntz', self.write_element('a.json', self.diagonal(1, 1)),
                                 self.write_element('b.json', self.diagonal(1, 0)))
        self.assertEqual((code, report['reason']), (1, 'NotSubequivalent'))

    def test_cuntz_map(self):
        code, report = self.call('cuntz_map', self.write_map('e.json', self.diagonal_embedding(0.3, 0.7)))
        self.assertEqual(code, 0)
        self.assertEqual(report['result']['T'], [[1, 1]])

    def test_cuntz_map_of_compression(self):
        code, report = self.call('cuntz_map', self.write_map('v.json', self.compression(np.diag([1.0, 0.5]))))
        self.assertEqual((code, report['reason']), (1, 'NotOrderZero'))
        self.assertNotIn('result', report)
        self.assertGreater(report['residuals']['adjoint'], 1e-8)
        self.assertEqual(set(report['witness']), {'a', 'b', 'violation'})


class TraceComposeTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for the ``trace_compose`` command.
    """

    def test_order_zero_map(self):
        path = self.write_map('e.json', self.diagonal_embedding(0.3, 0.7))
        code, report = self.call('trace_compose', path, '--weights', '1')
        self.assertEqual(code, 0)
        self.assertMatrixClose(report['result']['check']['weights'], [0.3, 0.7])
        self.assertTrue(report['result']['check']['tracial'])

    def test_compression_is_not_tracial(self):
        path = self.write_map('v.json', self.compression(np.diag([1.0, 0.5])))
        code, report = self.call('trace_compose', path, '--weights', '1')
        self.assertEqual((code, report['reason']), (1, 'NotTracial'))
        self.assertAlmostEqual(report['residuals']['tracial_defect'], 0.75)

    def test_weights_must_fit_the_codomain(self):
        path = self.write_map('half.json', self.scaled_identity(0.5))
        code, report = self.call('trace_compose', path, '--weights', '1,2')
        self.assertEqual((code, report['reason']), (2, 'SchemaError'))

    def test_non_finite_weights(self):
        path = self.write_map('half.json', self.scaled_identity(0.5))
        for weights in ('nan', 'inf', '1,-inf'):
            with self.subTest(weights=weights):
                code, report = self.call('trace_compose', path, '--weights', weights)
                self.assertEqual((code, report['verdict'], report['reason']), (2, 'error', 'InvalidArgument'))


class ConeTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for the ``cone`` command in both directions.
    """

    def test_half_identity(self):
        code, report = self.call('cone', self.write_map('half.json', self.scaled_identity(0.5)))
        self.assertEqual(code, 0)
        levels = report['result']['levels']
        self.assertEqual(len(levels), 1)
        self.assertAlmostEqual(levels[0]['t'], 0.5)
        self.assertLessEqual(report['residuals']['roundtrip'], 1e-8)

    def test_round_trip_through_files(self):
        phi = self.order_zero_map(5)
        code, _ = self.call('cone', self.write_map('oz.json', phi), '-o', self.path('rep.json'))
        self.assertEqual(code, 0)
        code, report = self.call('cone', self.path('rep.json'), '--from-rep', '-o', self.path('back.json'))
        self.assertEqual(code, 0)
        self.assertMapsClose(deserialize(MapSerializer, self.read_document('back.json')), phi)

    def test_not_order_zero(self):
        code, report = self.call('cone', self.write_map('v.json', self.compression(np.diag([1.0, 0.5]))))
        self.assertEqual((code, report['reason']), (1, 'NotOrderZero'))
        self.assertGreater(report['residuals']['adjoint'], 1e-8)
        self.assertIn('violation', report['witness'])

    def test_non_finite_level(self):
        code, _ = self.call('cone', self.write_map('half.json', self.scaled_identity(0.5)), '-o', self.path('rep.json'))
        self.assertEqual(code, 0)
        document = self.read_document('rep.json')
        document['levels'][0]['t'] = float('nan')
        code, report = self.call('cone', self.write_document('bad.json', document), '--from-rep')
        self.assertEqual((code, report['reason']), (2, 'SchemaError'))


class GenTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for the ``gen`` command and the determinism of the command output.
    """

    def test_generated_map_is_order_zero(self):
        code, _ = self.call('gen', '--kind', 'oz', '--seed', '42', '-o', self.path('oz.json'))
        self.assertEqual(code, 0)
        self.assertEqual(self.call('check_oz', self.path('oz.json'))[0], 0)

    def test_matches_library(self):
        code, report = self.call('gen', '--kind', 'oz', '--seed', '7')
        self.assertEqual(code, 0)
        self.assertMapsClose(deserialize(MapSerializer, report['result']), random_order_zero(self.spec(7)))

    def test_explicit_layout(self):
        code, report = self.call('gen', '--kind', 'hom', '--domain', '1,1', '--codomain', '3', '--mult', '1,1')
        self.assertEqual(code, 0)
        self.assertEqual(self.call('check_oz', self.write_document('hom.json', report['result']))[0], 0)

    def test_generic_map_is_rejected(self):
        code, _ = self.call('gen', '--kind', 'cp', '--domain', '2', '--codomain', '3', '-o', self.path('cp.json'))
        self.assertEqual(code, 0)
        self.assertEqual(self.call('check_oz', self.path('cp.json'))[0], 1)

    def test_multiplicities_need_a_layout(self):
        code, report = self.call('gen', '--mult', '1')
        self.assertEqual((code, report['reason']), (2, 'InvalidArgument'))

    def test_embedding_too_large(self):
        code, report = self.call('gen', '--domain', '2', '--codomain', '3', '--mult', '2')
        self.assertEqual((code, report['reason']), (1, 'EmbeddingTooLarge'))

    def test_identical_invocations_give_identical_bytes(self):
        invocations = [
            ('gen', '--kind', 'oz', '--seed', '3'),
            ('gen', '--kind', 'cp', '--seed', '11'),
            ('gen', '--kind', 'hom', '--seed', '19', '--no-strict-h'),
        ]
        for invocation in invocations:
            with self.subTest(invocation=invocation):
                self.assertEqual(self.call_raw(*invocation), self.call_raw(*invocation))
        path = self.write_map('oz.json', self.order_zero_map(3))
        for name in ('check_oz', 'decompose', 'cone', 'cuntz_map'):
            with self.subTest(command=name):
                self.assertEqual(self.call_raw(name, path), self.call_raw(name, path))


class GoldenOutputTestCase(CommandTestCaseHelperMixin, SimpleTestCase):
    """
    Test case comparing the stdout of fixed-seed invocations byte for byte with the files in ``golden/``.

    Arguments ending in ``.json`` name the input documents written in ``setUp``.
    """
    golden_directory = Path(__file__).resolve().parent / 'golden'
    invocations = [
        ('cuntz_class', 0, ('cuntz', 'a.json', '--seed', '1')),
        ('cuntz_level_two', 0, ('cuntz', 'm4.json', '-k', '2', '--seed', '2')),
        ('cuntz_two_blocks', 0, ('cuntz', 'two_blocks.json', '--seed', '3')),
        ('cuntz_not_subequivalent', 1, ('cuntz', 'identity.json', 'projection.json', '--seed', '4')),
        ('cuntz_delta_too_large', 1, ('cuntz', 'projection.json', 'half.json', '--delta', '0.6', '--seed', '5')),
        ('cuntz_zero_delta', 2, ('cuntz', 'projection.json', 'identity.json', '--delta', '0', '--seed', '6')),
        ('cuntz_not_positive', 1, ('cuntz', 'indefinite.json', '--seed', '7')),
        ('cuntz_indivisible_level', 2, ('cuntz', 'a.json', '-k', '2', '--seed', '8')),
        ('cuntz_level_zero', 2, ('cuntz', 'identity.json', '-k', '0', '--seed', '9')),
        ('cuntz_map_embedding', 0, ('cuntz_map', 'embedding.json', '--seed', '10')),
        ('cuntz_map_half_identity', 0, ('cuntz_map', 'half_identity.json', '--seed', '11')),
        ('amplify_level_zero', 2, ('amplify', 'half_identity.json', '-k', '0', '--seed', '12')),
        ('fcalc_malformed_polynomial', 2, ('fcalc', 'half_identity.json', '--poly', '1,x', '--seed', '13')),
        ('trace_compose_nan_weight', 2, ('trace_compose', 'embedding.json', '--weights', 'nan', '--seed', '14')),
        ('check_cp_negative_tolerance', 2, ('check_cp', 'half_identity.json', '--tol=-1', '--seed', '15')),
        ('gen_multiplicities_without_layout', 2, ('gen', '--mult', '1', '--seed', '16')),
        ('gen_embedding_too_large', 1, ('gen', '--domain', '2', '--codomain', '3', '--mult', '2', '--seed', '17')),
        ('gen_multiplicity_shape', 2, ('gen', '--domain', '1,1', '--codomain', '3', '--mult', '1', '--seed', '18')),
        ('gen_invalid_domain', 2, ('gen', '--domain', '0', '--seed', '19')),
        ('gen_negative_seed', 2, ('gen', '--domain', '1', '--codomain', '3', '--mult', '1', '--seed=-1')),
    ]

    def setUp(self):
        super().setUp()
        for name, element in [
            ('a.json', self.diagonal(1, 0.5, 0)),
            ('m4.json', self.diagonal(1, 1, 0, 0)),
            ('two_blocks.json', self.diagonal(1, 1, 0, dims=[1, 2])),
            ('identity.json', self.diagonal(1, 1)),
            ('projection.json', self.diagonal(1, 0)),
            ('half.json', self.diagonal(0.5, 0)),
            ('indefinite.json', self.diagonal(1, -1)),
        ]:
            self.write_document(name, serialize(ElementSerializer, element))
        self.write_map('embedding.json', self.diagonal_embedding(0.3, 0.7))
        self.write_map('half_identity.json', self.scaled_identity(0.5))

    def resolve(self, argument: str) -> str:
        return self.path(argument) if argument.endswith('.json') else argument

    def test_suite_size(self):
        self.assertEqual(len(self.invocations), 20)
        self.assertEqual(sorted(p.stem for p in self.golden_directory.glob('*.json')),
                         sorted(name for name, _, _ in self.invocations))

    def test_output_matches_golden_files(self):
        for name, exit_code, invocation in self.invocations:
            with self.subTest(golden=name):
                code, text = self.call_raw(*[self.resolve(argument) for argument in invocation])
                self.assertEqual(code, exit_code)
                self.assertEqual(text, (self.golden_directory / f'{name}.json').read_text(encoding='utf-8'))
