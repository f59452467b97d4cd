"""Tests of the command-line front end

if (unknown subcommand or flag) or (missing required flag):
    - exit code 2

if (invalid value: step <= 0, THREADS not a positive integer, ray off the contour):
    - exit code 2

if (domain error: point outside region (a), blow-up, no threshold):
    - exit code 1

- JSON payload with "schema": "v1" on standard output
- CSV table with --csv, file output with --out
"""

import os
import json
import pytest
from ttstar import main


@pytest.fixture(scope='function', autouse=False)
def prepare_environment():
    """Preparing environment
        - removing "result.json" and "result.csv" files before and after test
    """
    for path in ('./result.json', './result.csv'):
        if os.path.exists(path):
            os.remove(path)

    yield

    for path in ('./result.json', './result.csv'):
        if os.path.exists(path):
            os.remove(path)


def run(capsys, *argv) -> tuple[int, str]:
    """Runs main, returns exit code and standard output"""
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestsUsage:
    """Tests of usage errors"""

    def test_unknown_command(self, capsys):
        """Running an unknown subcommand
            - exit code 2
        """
        code, _ = run(capsys, 'draw-figure')
        assert code == 2

    def test_unknown_flag(self, capsys):
        """Running classify with an unknown flag
            - exit code 2
        """
        code, _ = run(capsys, 'classify', '--s1', '0', '--s2', '0', '--s3', '1')
        assert code == 2

    def test_missing_flag(self, capsys):
        """Running classify without --s2
            - exit code 2
        """
        code, _ = run(capsys, 'classify', '--s1', '0')
        assert code == 2

    def test_help(self, capsys):
        """Running --help
            - exit code 0
        """
        code, out = run(capsys, '--help')
        assert code == 0 and 'solvable-from' in out

    def test_invalid_step(self, capsys):
        """Running region-grid with step 0
            - exit code 2, message on standard error
        """
        code = main(['region-grid', '--step', '0'])
        captured = capsys.readouterr()
        assert code == 2 and captured.out == '' and 'step' in captured.err

    def test_invalid_threads_env(self, capsys, monkeypatch):
        """Running with THREADS=zero in the environment
            - exit code 2
        """
        monkeypatch.setenv('THREADS', 'zero')
        code, _ = run(capsys, 'classify', '--s1', '0', '--s2', '0')
        assert code == 2

    def test_ray_off_contour(self, capsys):
        """Requesting Gamma3 jumps on the ray pi / 4
            - exit code 2
        """
        code, _ = run(capsys, 'rh-jumps', '--s1', '1', '--s2', '0', '--theta', '0.25', '--contour', 'gamma3')
        assert code == 2


class TestsCommands:
    """Tests of subcommand outputs"""

    def test_classify(self, capsys):
        """Classifying (0, 0) of case 4a
            - {"schema": "v1", "in_a": true, "in_b": true}
        """
        code, out = run(capsys, 'classify', '--case', '4a', '--s1', '0', '--s2', '0')
        assert code == 0 and json.loads(out) == {'schema': 'v1', 'in_a': True, 'in_b': True}

    def test_classify_details(self, capsys):
        """Classifying (1, -1) with all characterizations
            - all four region (b) characterizations agree
        """
        code, out = run(capsys, 'classify', '--s1', '1', '--s2', '-1', '--details')
        payload = json.loads(out)
        assert code == 0 and all(payload['characterizations'].values())

    def test_integer_points(self, capsys):
        """Enumerating integer points of case 4a
            - 19 rows with factorizations
        """
        code, out = run(capsys, 'integer-points', '--case', '4a', '--window', '-6', '6', '-9', '4')
        payload = json.loads(out)
        assert (code == 0
            and payload['count'] == 19
            and len(payload['points']) == 19
            and all(point['factors'] for point in payload['points'])
            and len(payload['slivers']) == 2)

    def test_map_gamma(self, capsys):
        """Mapping gamma = (0, 0) to Stokes parameters and (0, 0) back
            - s = (0, 0) and gamma = (0, 0)
        """
        code, out = run(capsys, 'map-gamma', '--gamma0', '0', '--gamma1', '0')
        forward = json.loads(out)
        code_back, out_back = run(capsys, 'map-gamma', '--s1', '0', '--s2', '0')
        back = json.loads(out_back)
        assert (code == 0 and code_back == 0
            and abs(forward['stokes']['s1']) < 1e-12 and abs(forward['stokes']['s2']) < 1e-12
            and abs(back['gammas']['gamma0']) < 1e-12 and abs(back['gammas']['gamma1']) < 1e-12)

    def test_map_gamma_outside(self, capsys):
        """Mapping (0, 3), outside region (a)
            - exit code 1
        """
        code, out = run(capsys, 'map-gamma', '--s1', '0', '--s2', '3')
        assert code == 1 and out == ''

    def test_verify_identities(self, capsys):
        """Verifying identities of all cases on 5 draws
            - exit code 0, every report passed
        """
        code, out = run(capsys, 'verify-identities', '--draws', '5', '--seed', '3')
        payload = json.loads(out)
        assert (code == 0
            and payload['passed'] is True
            and all(report['passed'] for report in payload['reports']))

    def test_region_grid_csv(self, capsys):
        """Printing a small grid as CSV
            - header and 25 rows, same for 1 and 4 threads
        """
        argv = ('region-grid', '--s1-min', '-1', '--s1-max', '1', '--s2-min', '-1', '--s2-max', '1',
            '--step', '0.5', '--csv')
        code, out = run(capsys, *argv, '--threads', '1')
        code_threads, out_threads = run(capsys, *argv, '--threads', '4')
        lines = out.splitlines()
        assert (code == 0 and code_threads == 0
            and lines[0] == 's1,s2,in_a,in_b'
            and len(lines) == 26
            and out == out_threads)

    def test_csv_without_table(self, capsys):
        """Requesting CSV from classify
            - exit code 2
        """
        code, _ = run(capsys, 'classify', '--s1', '0', '--s2', '0', '--csv')
        assert code == 2

    def test_solve_ode_blow_up(self, capsys):
        """Integrating s = (0, 3)
            - exit code 1, trajectory up to the blow-up radius is printed
        """
        code, out = run(capsys, 'solve-ode', '--s1', '0', '--s2', '3')
        payload = json.loads(out)
        assert code == 1 and payload['solution']['blow_up'] is not None and payload['rows']

    def test_connection_check(self, capsys):
        """Checking gamma = (0.2, 0.2)
            - exit code 0, report passed
        """
        code, out = run(capsys, 'connection-check', '--gamma0', '0.2', '--gamma1', '0.2')
        payload = json.loads(out)
        assert code == 0 and payload['passed'] is True and len(payload['checks']) == 1

    def test_rh_y0(self, capsys):
        """Reading w from Y(0, x) at x = 5 for s = (1, -1)
            - symmetries hold, no warning
        """
        code, out = run(capsys, 'rh-y0', '--s1', '1', '--s2', '-1', '--x', '5')
        evaluation = json.loads(out)['evaluations'][0]
        assert (code == 0
            and evaluation['symmetries']['passed'] is True
            and evaluation['warn_flags'] == [])

    def test_solvable_from(self, capsys):
        """Threshold of s = (0, 0) and of (10, 0)
            - 0 inside region (b), positive outside
        """
        code, out = run(capsys, 'solvable-from', '--s1', '0', '--s2', '0')
        code_out, out_out = run(capsys, 'solvable-from', '--s1', '10', '--s2', '0')
        assert (code == 0 and code_out == 0
            and json.loads(out)['x_threshold'] == 0
            and json.loads(out_out)['x_threshold'] > 0)

    def test_no_threshold(self, capsys):
        """Threshold of s = (1e6, 0) with x_max = 10
            - exit code 1
        """
        code, _ = run(capsys, 'solvable-from', '--s1', '1e6', '--s2', '0', '--x-max', '10')
        assert code == 1

    def test_char_poly(self, capsys):
        """Characteristic polynomial of s = (0, 0)
            - mu^4 + 1, roots on the unit circle
        """
        code, out = run(capsys, 'char-poly', '--s1', '0', '--s2', '0')
        payload = json.loads(out)
        assert (code == 0
            and payload['mismatch'] < 1e-12
            and all(abs(modulus - 1) < 1e-12 for modulus in payload['monodromy_moduli']))

    def test_rh_jumps(self, capsys):
        """Gamma3 jumps on the ray pi / 8
            - unit determinant, residual below 1e-12
        """
        code, out = run(capsys, 'rh-jumps', '--s1', '0.5', '--s2', '-0.5', '--theta', '0.125',
            '--contour', 'gamma3', '--x', '1', '--k', '0.5', '1')
        jumps = json.loads(out)['jumps']
        assert code == 0 and len(jumps) == 2 and all(jump['residual'] < 1e-12 for jump in jumps)


class TestsOutputFiles:
    """Tests of --out"""

    @pytest.mark.usefixtures('prepare_environment')
    def test_json_file(self, capsys):
        """Writing classify to result.json
            - nothing printed, file holds the payload
        """
        code, out = run(capsys, 'classify', '--s1', '0', '--s2', '0', '--out', './result.json')

        with open('./result.json', 'r', encoding='utf-8') as file:
            saved = json.load(file)

        assert code == 0 and out == '' and saved['in_a'] is True

    @pytest.mark.usefixtures('prepare_environment')
    def test_csv_file(self, capsys):
        """Writing the threshold table to result.csv
            - header s1,s2,x_threshold and 4 rows
        """
        code, _ = run(capsys, 'solvable-from', '--s1-min', '0', '--s1-max', '1', '--s2-min', '0',
            '--s2-max', '1', '--step', '1', '--out', './result.csv')

        with open('./result.csv', 'r', encoding='utf-8') as file:
            lines = file.read().splitlines()

        assert code == 0 and lines[0] == 's1,s2,x_threshold' and len(lines) == 5

    def test_wrong_extension(self, capsys):
        """Writing classify to result.txt
            - exit code 2, no file
        """
        code, _ = run(capsys, 'classify', '--s1', '0', '--s2', '0', '--out', './result.txt')
        assert code == 2 and not os.path.exists('./result.txt')
