import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from chartable.reports import Report
from chartable.serializers import validate_table_json
from glchars import __version__

from .base import EXIT_BOUNDS, EXIT_USAGE, EXIT_VERIFY
from .cache import ResultCache
from .serializers import JobConfigSerializer


def label(*pairs):
    """label(((1, 0), [2])) -> '[{"orbit": {"d": 1, "rep": 0}, "partition": [2]}]'"""
    return json.dumps([{'orbit': {'d': d, 'rep': rep}, 'partition': list(lam)} for (d, rep), lam in pairs])


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def run_command(self, *args) -> str:
        if args[0] in ('table', 'green'):
            args = (*args, '--cache-dir', self.tmp.name)
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO())
        return out.getvalue().strip()

    def assertExitCode(self, code, *args):
        with self.assertRaises(CommandError) as ctx:
            self.run_command(*args)
        self.assertEqual(ctx.exception.returncode, code)


class GreenCommandTests(CommandTestCase):

    def test_valores(self):
        self.assertEqual(self.run_command('green', '--lambda', '1,1', '--rho', '2'), '-1 + t')
        self.assertEqual(self.run_command('green', '--lambda', '2', '--rho', '1,1'), '1')
        self.assertEqual(self.run_command('green', '--lambda', '1,1', '--rho', '1,1'), '1 + t')

    def test_fila_completa(self):
        lines = self.run_command('green', '--lambda', '2').splitlines()
        self.assertEqual(sorted(lines), ['ρ=1,1: 1', 'ρ=2: 1'])

    def test_json(self):
        data = json.loads(self.run_command('green', '--lambda', '1,1', '--rho', '2', '--format', 'json'))
        self.assertEqual(data, {'lambda': [1, 1], 'rho': [2], 'coeffs': [-1, 1]})

    def test_pesos_distintos(self):
        self.assertExitCode(EXIT_USAGE, 'green', '--lambda', '2', '--rho', '1')

    def test_falta_lambda(self):
        self.assertExitCode(EXIT_USAGE, 'green')


class HallCommandTests(CommandTestCase):

    def test_valor(self):
        self.assertEqual(self.run_command('hall', '--lambda', '1,1', '--mu', '1', '--nu', '1', '--q', '3'), '4')
        self.assertEqual(self.run_command('hall', '--lambda', '2', '--mu', '1', '--nu', '1,1', '--q', '2'), '0')

    def test_polinomio(self):
        out = self.run_command('hall', '--lambda', '1,1', '--mu', '1', '--nu', '1', '--q', '2', '--polynomial')
        self.assertEqual(out.splitlines(), ['3', '1 + q'])

    def test_q_no_primo(self):
        self.assertExitCode(EXIT_USAGE, 'hall', '--lambda', '1,1', '--mu', '1', '--nu', '1', '--q', '6')


class ClassesOrbitsCommandTests(CommandTestCase):

    def test_clases_gl23(self):
        data = json.loads(self.run_command('classes', '--n', '2', '--q', '3', '--format', 'json'))
        self.assertEqual(len(data), 8)
        self.assertEqual(sum(entry['size'] for entry in data), 48)
        for entry in data:
            self.assertEqual(entry['centralizer'] * entry['size'], 48)

    def test_clases_texto(self):
        out = self.run_command('classes', '--n', '2', '--q', '2')
        self.assertTrue(out.startswith('GL_2(F_2): 3 clases, orden 6'))

    def test_orbitas(self):
        data = json.loads(self.run_command('orbits', '--q', '2', '--d', '2', '--format', 'json'))
        self.assertEqual(len(data), 1)
        self.assertEqual(data[0]['coset'], [1, 2])
        self.assertEqual(data[0]['poly'], [1, 1, 1])

    def test_orbitas_de_caracteres(self):
        data = json.loads(self.run_command('orbits', '--q', '3', '--d', '2', '--kind', 'character', '--format', 'json'))
        self.assertEqual(len(data), 3)
        self.assertTrue(all(entry['kind'] == 'character' and 'poly' not in entry for entry in data))

    def test_limite_de_cuerpo(self):
        with override_settings(GLCHARS_MAX_FIELD_SIZE=3):
            self.assertExitCode(EXIT_BOUNDS, 'orbits', '--q', '2', '--d', '2')


class TableCommandTests(CommandTestCase):

    def test_grupo_trivial(self):
        data = json.loads(self.run_command('table', '--n', '0', '--q', '2', '--format', 'json'))
        self.assertEqual(len(data['classes']), 1)
        self.assertEqual(data['characters'][0]['degree'], 1)

    def test_json_valido(self):
        out = self.run_command('table', '--n', '2', '--q', '3', '--format', 'json', '--validate')
        data = json.loads(out)
        validate_table_json(data)
        self.assertEqual(sorted(c['degree'] for c in data['characters']), [1, 1, 2, 2, 2, 3, 3, 4])

    def test_cache_caliente_igual_a_fria(self):
        cold = self.run_command('table', '--n', '2', '--q', '2', '--format', 'json')
        self.assertEqual(len(list(Path(self.tmp.name).glob('*.json'))), 1)
        warm = self.run_command('table', '--n', '2', '--q', '2', '--format', 'json')
        self.assertEqual(cold, warm)
        bypass = self.run_command('table', '--n', '2', '--q', '2', '--format', 'json', '--no-cache')
        self.assertEqual(cold, bypass)

    def test_csv(self):
        lines = self.run_command('table', '--n', '2', '--q', '2', '--format', 'csv').splitlines()
        # cabecera + centralizadores + tamaños + 3 caracteres
        self.assertEqual(len(lines), 6)
        self.assertTrue(lines[0].startswith('character,degree,'))

    def test_texto(self):
        out = self.run_command('table', '--n', '2', '--q', '2')
        self.assertTrue(out.startswith('GL_2(F_2): 3 clases'))

    def test_encolar_en_modo_eager(self):
        out = self.run_command('table', '--n', '1', '--q', '3', '--enqueue')
        self.assertIn('Tabla guardada en', out)
        self.assertEqual(len(list(Path(self.tmp.name).glob('*.json'))), 1)

    def test_limite_de_conductor(self):
        with override_settings(GLCHARS_MAX_CONDUCTOR_DEGREE=4):
            self.assertExitCode(EXIT_BOUNDS, 'table', '--n', '3', '--q', '3', '--no-cache')

    def test_argumento_desconocido(self):
        self.assertExitCode(EXIT_USAGE, 'table', '--n', '2', '--q', '2', '--format', 'xml')


class LabelCommandTests(CommandTestCase):

    def test_grado(self):
        self.assertEqual(self.run_command('degree', '--q', '2', '--char', label(((1, 0), [1, 1]))), '1')
        self.assertEqual(self.run_command('degree', '--q', '2', '--char', label(((1, 0), [2]))), '2')
        self.assertEqual(self.run_command('degree', '--q', '3', '--char', label(((2, 1), [1]))), '2')

    def test_grado_con_n_incorrecto(self):
        self.assertExitCode(EXIT_USAGE, 'degree', '--q', '2', '--char', label(((1, 0), [2])), '--n', '3')

    def test_etiqueta_no_valida(self):
        # 0 tiene clase {0} módulo 3: no es una órbita de grado 2
        self.assertExitCode(EXIT_USAGE, 'degree', '--q', '2', '--char', label(((2, 0), [1])))

    def test_valor_steinberg(self):
        steinberg = label(((1, 0), [2]))
        self.assertEqual(self.run_command('charvalue', '--q', '2', '--char', steinberg,
                                          '--cls', label(((1, 0), [1, 1]))), '2')
        self.assertEqual(self.run_command('charvalue', '--q', '2', '--char', steinberg,
                                          '--cls', label(((1, 0), [2]))), '0')
        self.assertEqual(self.run_command('charvalue', '--q', '2', '--char', steinberg,
                                          '--cls', label(((2, 1), [1]))), '-1')

    def test_caminos_unipotentes_coinciden(self):
        args = ('--q', '3', '--char', label(((1, 0), [2])), '--cls', label(((1, 0), [2])))
        matrix = self.run_command('charvalue', *args)
        for path in ('printed', 'general'):
            self.assertEqual(self.run_command('charvalue', *args, '--path', path), matrix)

    def test_pesos_incompatibles(self):
        self.assertExitCode(EXIT_USAGE, 'charvalue', '--q', '2', '--char', label(((1, 0), [2])),
                            '--cls', label(((1, 0), [1])))

    def test_json_mal_formado(self):
        self.assertExitCode(EXIT_USAGE, 'degree', '--q', '2', '--char', '[{')


class VerifyCommandTests(CommandTestCase):

    def test_gl22_con_oraculo(self):
        data = json.loads(self.run_command('verify', '--n', '2', '--q', '2', '--brute', '--paths', '--format', 'json'))
        self.assertTrue(data['passed'])
        names = {check['check'] for check in data['checks']}
        self.assertTrue({'first_orthogonality', 'paths_general', 'paths_printed', 'induction_1_1'} <= names)

    def test_divergencias_impresas_son_informativas(self):
        # la fórmula impresa diverge fuera de lo unipotente: se informa sin fallar
        data = json.loads(self.run_command('verify', '--n', '2', '--q', '3', '--paths', '--format', 'json'))
        self.assertTrue(data['passed'])
        checks = {check['check']: check for check in data['checks']}
        self.assertEqual(checks['paths_general']['status'], 'pass')
        self.assertFalse(checks['paths_general']['advisory'])
        self.assertEqual(checks['paths_printed']['status'], 'fail')
        self.assertTrue(checks['paths_printed']['advisory'])

    def test_divergencias_en_el_resumen(self):
        out = self.run_command('verify', '--n', '2', '--q', '3', '--paths')
        self.assertIn('1 divergencias informativas', out.splitlines()[0])

    def test_oraculo_fuera_de_limite_se_omite(self):
        with override_settings(GLCHARS_MAX_GROUP_ORDER=10):
            data = json.loads(self.run_command('verify', '--n', '2', '--q', '3', '--brute', '--format', 'json'))
        self.assertTrue(data['passed'])
        self.assertIn('skipped', {check['status'] for check in data['checks']})

    def test_fallo_de_verificacion(self):
        report = Report()
        report.add('first_orthogonality', False, {'row': 0})
        with mock.patch('cli.management.commands.verify.verify_table', return_value=report):
            self.assertExitCode(EXIT_VERIFY, 'verify', '--n', '1', '--q', '2')


class ConfigAndCacheTests(SimpleTestCase):

    def test_config_completa(self):
        serializer = JobConfigSerializer(data={'command': 'table', 'n': 2, 'q': 4})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.validated_data
        self.assertEqual(config['format'], 'pretty')
        self.assertIn('max_group_order', config['bounds'])

    def test_config_faltan_argumentos(self):
        serializer = JobConfigSerializer(data={'command': 'hall', 'q': 2})
        self.assertFalse(serializer.is_valid())
        self.assertIn('--lambda', str(serializer.errors))

    def test_clave_depende_de_la_version(self):
        key = ResultCache.key('table', {'n': 2, 'q': 2})
        self.assertEqual(key, ResultCache.key('table', {'q': 2, 'n': 2}))
        with mock.patch('cli.cache.__version__', __version__ + '.dev'):
            self.assertNotEqual(key, ResultCache.key('table', {'n': 2, 'q': 2}))

    def test_fichero_corrupto_se_recalcula(self):
        with tempfile.TemporaryDirectory() as tmp:
            cache = ResultCache(tmp)
            key = cache.key('green', {'lambda': [1]})
            cache.path(key).write_text('{', encoding='utf-8')
            self.assertEqual(cache.fetch('green', {'lambda': [1]}, lambda: [1]), [1])
            self.assertEqual(json.loads(cache.path(key).read_text(encoding='utf-8')), [1])

    def test_cache_desactivada(self):
        with tempfile.TemporaryDirectory() as tmp:
            cache = ResultCache(tmp, enabled=False)
            cache.fetch('green', {'lambda': [1]}, lambda: [1])
            self.assertEqual(list(Path(tmp).iterdir()), [])
