"""
Command-line front end of the bilateral index transform toolkit.

Every subcommand (eval, verify, transform, invert, plancherel, table) is parsed
into one validated RunConfig before any computation. Records are written as
JSON (complex values as paired _re/_im fields) or as RFC-4180 CSV with
17 significant digits.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 numeric failure.
"""
import argparse
import concurrent.futures
import csv
import io
import json
import logging
import math
import os
import sys
from typing import Any, Dict, List, Mapping, NamedTuple, Optional

import numpy as np
from pydantic import ValidationError

# Add the project root directory to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.eigenfunctions import (
    EigenfunctionFactory,
    gram_matrix_delta,
    romanovski_theta,
    spectral_density_r,
    spectral_matrix_xi,
    theta_basis,
)
from src.exceptions import ConfigError, TransformError
from src.models import BilateralParams, Command, GridSpec, Mat2, OutputFormat, Quantity, RunConfig
from src.series import bilateral_h_star, dougall_closed_form
from src.transform import (
    evaluate,
    inner_product,
    inverse_transform,
    plancherel_terms,
    preset,
    sample_transform,
)
from src.utils.constants import DEFAULT_SAMPLE_X_SCALE
from src.utils.helpers import complex_record, format_number
from src.verify import SuiteFactory

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

DEFAULT_INVERT_GRID = GridSpec(start=-DEFAULT_SAMPLE_X_SCALE, stop=DEFAULT_SAMPLE_X_SCALE, num=41)
MATRIX_ENTRIES = ('m11', 'm12', 'm21', 'm22')


class Output(NamedTuple):
    columns: List[str]
    rows: List[Dict[str, Any]]
    exit_code: int = EXIT_OK


def _complex_columns(*prefixes: str) -> List[str]:
    return [f"{p}_{part}" for p in prefixes for part in ("re", "im")]


def _matrix_record(matrix: Mat2) -> Dict[str, float]:
    record = {}
    for entry in MATRIX_ENTRIES:
        record.update(complex_record(entry, getattr(matrix, entry)))
    return record


class TransformService:
    """
    Service class that runs one validated configuration.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.params = config.params
        self._handlers = {
            Command.eval: self.cmd_eval,
            Command.verify: self.cmd_verify,
            Command.transform: self.cmd_transform,
            Command.invert: self.cmd_invert,
            Command.plancherel: self.cmd_plancherel,
            Command.table: self.cmd_table,
        }

    def run(self) -> Output:
        logger.info("Running %s with alpha=%g, beta=%g", self.config.command.value, self.params.alpha, self.params.beta)
        return self._handlers[self.config.command]()

    def _function(self, name: str):
        try:
            return preset(name)
        except ValueError as error:
            raise ConfigError(str(error), {"function": name}) from error

    def _x_points(self, default: Optional[GridSpec] = None) -> np.ndarray:
        grid = self.config.x_grid or default
        return np.zeros(1) if grid is None else grid.points

    # eval

    def cmd_eval(self) -> Output:
        quantity = self.config.quantity
        if quantity in (Quantity.phi, Quantity.psi1, Quantity.psi2):
            return self._eval_eigenfunction(quantity.value)
        if quantity == Quantity.theta:
            return self._eval_theta()
        if quantity == Quantity.romanovski:
            return self._eval_romanovski()
        if quantity in (Quantity.delta, Quantity.xi, Quantity.r):
            return self._eval_matrix(quantity)
        if quantity == Quantity.h2star:
            return self._eval_h2star()
        return self._eval_dougall()

    def _eval_eigenfunction(self, kind: str) -> Output:
        config = self.config
        x = self._x_points()
        function = EigenfunctionFactory.create_eigenfunction(kind, self.params, config.sigma, config.t)
        values = function(x) if x.size else np.zeros(0, dtype=complex)
        rows = [{"x": float(xi), **complex_record("value", v), "abs_error": None, "status": "ok"}
                for xi, v in zip(x, values)]
        return Output(["x"] + _complex_columns("value") + ["abs_error", "status"], rows)

    def _eval_theta(self) -> Output:
        x = self._x_points()
        first, second = theta_basis(self.params, self.config.sigma, x)
        rows = [{"x": float(xi), **complex_record("theta1", a), **complex_record("theta2", b)}
                for xi, a, b in zip(x, first, second)]
        return Output(["x"] + _complex_columns("theta1", "theta2"), rows)

    def _eval_romanovski(self) -> Output:
        x = self._x_points()
        values = romanovski_theta(self.params, self.config.k, x) if x.size else []
        rows = [{"x": float(xi), "k": self.config.k, **complex_record("value", v)} for xi, v in zip(x, values)]
        return Output(["x", "k"] + _complex_columns("value"), rows)

    def _matrix(self, quantity: Quantity, sigma: complex) -> Mat2:
        if quantity == Quantity.delta:
            return gram_matrix_delta(self.params, sigma)
        if quantity == Quantity.xi:
            return spectral_matrix_xi(self.params, sigma)
        return spectral_density_r(self.params, sigma, self.config.t, self.config.s)

    def _eval_matrix(self, quantity: Quantity) -> Output:
        sigma = self.config.sigma
        row = {**complex_record("sigma", sigma), **_matrix_record(self._matrix(quantity, sigma))}
        return Output(_complex_columns("sigma", *MATRIX_ENTRIES), [row])

    def _eval_h2star(self) -> Output:
        config = self.config
        try:
            params = BilateralParams(upper=config.upper, lower=config.lower, z=config.z)
        except ValidationError as error:
            raise ConfigError(str(error), {}) from error
        series = bilateral_h_star(params)
        row = {**complex_record("value", series.value), "abs_error": series.abs_error_estimate,
               "terms": series.terms_used, "status": series.status.value}
        return Output(_complex_columns("value") + ["abs_error", "terms", "status"], [row])

    def _eval_dougall(self) -> Output:
        (a1, a2), (b1, b2) = self.config.upper, self.config.lower
        value = dougall_closed_form(a1, a2, b1, b2)
        series = bilateral_h_star(BilateralParams(upper=[a1, a2], lower=[b1, b2], z=1))
        row = {**complex_record("value", value), "abs_error": abs(series.value - value),
               "status": series.status.value}
        return Output(_complex_columns("value") + ["abs_error", "status"], [row])

    # verify

    def cmd_verify(self) -> Output:
        config = self.config
        try:
            suites = SuiteFactory.create_multiple_suites([config.suite], config.seed, config.params, config.nu_max)
        except ValueError as error:
            raise ConfigError(str(error), {"suite": config.suite}) from error

        with concurrent.futures.ThreadPoolExecutor(max_workers=config.workers) as executor:
            futures = {name: executor.submit(suite.run) for name, suite in suites.items()}
            reports = [futures[name].result() for name in suites]

        rows = []
        for report in reports:
            for check in report.checks:
                rows.append({"suite": report.suite, "check": check.name, "passed": check.passed,
                             "residual": check.residual, "tolerance": check.tolerance, "detail": check.detail})
        failed = [f"{row['suite']}.{row['check']}" for row in rows if not row["passed"]]
        if failed:
            logger.warning("%d of %d checks failed: %s", len(failed), len(rows), ", ".join(failed))
        columns = ["suite", "check", "passed", "residual", "tolerance", "detail"]
        return Output(columns, rows, EXIT_FAILED if failed else EXIT_OK)

    # transform, invert, plancherel

    def _sample(self, name: str):
        config = self.config
        return sample_transform(self.params, self._function(name), config.t, config.s, nu_max=config.nu_max)

    def cmd_transform(self) -> Output:
        sample = self._sample(self.config.function)
        rows = []
        for i, nu in enumerate(sample.nu_grid):
            rows.append({"nu": nu, "weight": sample.weights[i],
                         **complex_record("t", sample.t_values[i]), **complex_record("s", sample.s_values[i]),
                         **complex_record("jt", sample.values_t[i]), **complex_record("js", sample.values_s[i])})
        if sample.discrete_values:
            logger.info("discrete pairings: %s", sample.discrete_values)
        return Output(["nu", "weight"] + _complex_columns("t", "s", "jt", "js"), rows)

    def cmd_invert(self) -> Output:
        f = self._function(self.config.function)
        x = self._x_points(DEFAULT_INVERT_GRID)
        sample = self._sample(self.config.function)
        values = inverse_transform(self.params, sample, x) if x.size else np.zeros(0, dtype=complex)
        exact = evaluate(f, x)
        rows = [{"x": float(xi), **complex_record("value", v), **complex_record("exact", e), "abs_error": abs(v - e)}
                for xi, v, e in zip(x, values, exact)]
        return Output(["x"] + _complex_columns("value", "exact") + ["abs_error"], rows)

    def cmd_plancherel(self) -> Output:
        config = self.config
        f, g = self._function(config.function), self._function(config.other_function)
        exact = inner_product(f, g)
        terms = plancherel_terms(self.params, self._sample(config.function), self._sample(config.other_function))
        spectral = terms["continuous"] + terms["discrete"]
        row = {"function": f.name, "other_function": g.name, **complex_record("exact", exact),
               **complex_record("spectral", spectral), **complex_record("continuous", terms["continuous"]),
               **complex_record("discrete", terms["discrete"]), "abs_error": abs(spectral - exact)}
        columns = ["function", "other_function"] + _complex_columns("exact", "spectral", "continuous", "discrete")
        return Output(columns + ["abs_error"], [row])

    # table

    def cmd_table(self) -> Output:
        config = self.config
        if config.quantity == Quantity.phi:
            return self._eval_eigenfunction('phi')
        rows = []
        for nu in config.nu_grid.points:
            rows.append({"nu": float(nu), **_matrix_record(self._matrix(Quantity.r, 1j * nu))})
        return Output(["nu"] + _complex_columns(*MATRIX_ENTRIES), rows)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def render(output: Output, output_format: OutputFormat) -> str:
    """Render records as JSON or CSV text."""
    if output_format == OutputFormat.json:
        records = [{key: _json_value(row.get(key)) for key in output.columns} for row in output.rows]
        return json.dumps(records, indent=2, allow_nan=False) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(output.columns)
    for row in output.rows:
        writer.writerow([_csv_value(row.get(key)) for key in output.columns])
    return buffer.getvalue()


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Read a configuration file, either a JSON object or key=value lines.

    Raises:
        ConfigError: the file is unreadable or malformed
    """
    try:
        with open(path, 'r', encoding='utf-8') as config_file:
            text = config_file.read()
    except OSError as error:
        raise ConfigError(f"cannot read config file {path}: {error}", {"path": path}) from error
    if text.lstrip().startswith('{'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise ConfigError(f"invalid JSON in {path}: {error}", {"path": path}) from error
        if not isinstance(data, dict):
            raise ConfigError(f"{path} must hold a JSON object", {"path": path})
        return data
    data = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if '=' not in line:
            raise ConfigError(f"{path}:{number}: expected key=value", {"line": line})
        key, value = line.split('=', 1)
        data[key.strip().replace('-', '_')] = value.strip()
    return data


def _grid(text: str) -> Dict[str, Any]:
    parts = text.split(',')
    if len(parts) != 3:
        raise ConfigError(f"a grid is START,STOP,NUM, got {text!r}", {"grid": text})
    return {"start": parts[0], "stop": parts[1], "num": parts[2]}


def _tolerance_pairs(items: List[str]) -> Dict[str, str]:
    pairs = {}
    for item in items:
        if '=' not in item:
            raise ConfigError(f"a tolerance override is SETTING=VALUE, got {item!r}", {"tolerance": item})
        key, value = item.split('=', 1)
        pairs[key.strip()] = value.strip()
    return pairs


def _normalize(data: Dict[str, Any]) -> Dict[str, Any]:
    # flat alpha/beta and string grids are accepted in files and flags alike
    data = dict(data)
    params = data.pop('params', None)
    params = {} if params is None else params
    if not isinstance(params, Mapping):
        raise ConfigError(f"params must be a mapping of alpha and beta, got {params!r}", {"params": params})
    params = dict(params)
    for key in ('alpha', 'beta'):
        if key in data:
            params[key] = data.pop(key)
    if params:
        data['params'] = params
    if 'sigma_im' in data:
        sigma_im = data.pop('sigma_im')
        if not isinstance(sigma_im, (int, float, str)) or isinstance(sigma_im, bool):
            raise ConfigError(f"sigma_im must be a number, got {sigma_im!r}", {"sigma_im": sigma_im})
        data['sigma'] = complex(0.0, float(sigma_im))
    for key in ('x_grid', 'nu_grid'):
        if isinstance(data.get(key), str):
            data[key] = _grid(data[key])
    if isinstance(data.get('tolerances'), str):
        data['tolerances'] = _tolerance_pairs([item for item in data['tolerances'].split(';') if item])
    return data


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Merge the config file with the command-line flags; flags win.

    Raises:
        ConfigError: malformed file or flag values
        ValidationError: the merged configuration is invalid
    """
    data = _normalize(load_config_file(args.config)) if args.config else {}
    flags = {key: value for key, value in vars(args).items()
             if value is not None and key not in ('config', 'tol')}
    if args.tol:
        flags['tolerances'] = _tolerance_pairs(args.tol)
    flags = _normalize(flags)
    if 'params' in flags:
        flags['params'] = {**data.get('params', {}), **flags['params']}
    data.update(flags)
    return RunConfig(**data)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON or key=value configuration file')
    common.add_argument('--alpha', type=float)
    common.add_argument('--beta', type=float)
    common.add_argument('--sigma', help='spectral parameter as RE,IM')
    common.add_argument('--sigma-im', dest='sigma_im', type=float, help='sigma = i * SIGMA_IM')
    common.add_argument('--t', help='label t as RE,IM')
    common.add_argument('--s', help='label s as RE,IM')
    common.add_argument('--k', type=int, help='Romanovski index')
    common.add_argument('--x-grid', dest='x_grid', help='START,STOP,NUM')
    common.add_argument('--nu-grid', dest='nu_grid', help='START,STOP,NUM')
    common.add_argument('--function', help='test function preset')
    common.add_argument('--other-function', dest='other_function', help='second preset for plancherel')
    common.add_argument('--upper', help='upper parameters separated by ;')
    common.add_argument('--lower', help='lower parameters separated by ;')
    common.add_argument('--z', help='series argument as RE,IM')
    common.add_argument('--nu-max', dest='nu_max', type=float)
    common.add_argument('--seed', type=int)
    common.add_argument('--tol', action='append', metavar='SETTING=VALUE', help='tolerance override')
    common.add_argument('--workers', type=int, help='suites run in parallel by verify')
    common.add_argument('--out', help='output path, stdout by default')
    common.add_argument('--format', choices=[f.value for f in OutputFormat])
    common.add_argument('--log-level', dest='log_level')

    parser = argparse.ArgumentParser(prog='bit', description='Bilateral index transform toolkit')
    commands = parser.add_subparsers(dest='command', required=True)
    for name in ('eval', 'table'):
        sub = commands.add_parser(name, parents=[common])
        sub.add_argument('quantity', nargs='?', choices=[q.value for q in Quantity])
    sub = commands.add_parser('verify', parents=[common])
    sub.add_argument('suite', nargs='?', help=', '.join(SuiteFactory.get_supported_types()))
    for name in ('transform', 'invert', 'plancherel'):
        commands.add_parser(name, parents=[common])
    return parser


def write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8', newline='') as out_file:
        out_file.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ConfigError as error:
        print(f"{error.name}: {error.message}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValidationError, ValueError, TypeError) as error:
        print(f"ConfigError: {error}", file=sys.stderr)
        return EXIT_CONFIG

    logging.basicConfig(level=config.log_level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        with config.tolerance_overrides():
            output = TransformService(config).run()
    except ConfigError as error:
        print(f"{error.name}: {error.message}", file=sys.stderr)
        return EXIT_CONFIG
    except TransformError as error:
        logger.debug("context of %s: %s", error.name, error.context)
        print(f"{error.name}: {error.message}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ArithmeticError, ValueError) as error:
        logger.debug("numeric failure", exc_info=True)
        print(f"{type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_NUMERIC

    try:
        write_output(render(output, config.format), config.out)
    except OSError as error:
        print(f"ConfigError: cannot write {config.out}: {error}", file=sys.stderr)
        return EXIT_CONFIG
    return output.exit_code


if __name__ == "__main__":
    sys.exit(main())
