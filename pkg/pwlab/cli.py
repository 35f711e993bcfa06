"""
Command-line front end::

    pwlab classify --sigma pi --a 1 --b 1
    pwlab certify --sigma 1 --a -1 --b i
    pwlab orbit --sigma pi --a 0.5 --b 1 --adjoint
    pwlab matrix --sigma pi --a 1 --b pi --basis-m 4

Exit codes: 0 on success, 1 when certificates contradict the classifier, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from stereotype import DataError

from pwlab.certify.battery import ADJOINT_TARGET_OFFSET, certify_all
from pwlab.certify.certificate import Certificate
from pwlab.certify.golden import golden_path, load_golden
from pwlab.certify.spans import kernel_orbit_elements, orbit_elements, solve_span
from pwlab.classify import classify, explain
from pwlab.config import RunConfig
from pwlab.core.functions import SpectralFunction, read_csv as read_spectral_csv
from pwlab.core.kernels import KernelPoint, kernel_spectral
from pwlab.operators.matrix import assemble_matrix, write_csv as write_matrix_csv
from pwlab.operators.symbols import AffineSymbol, kernel_orbit_point
from pwlab.operators.weighted import chat, chat_adjoint
from pwlab.report import Envelope, Report
from pwlab.utils import PwlabError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2

# Command-line flags mapped to RunConfig fields
_OPTIONS = (
    ('--sigma', 'sigma', 'half-width of the band, e.g. 1, pi or pi/2'),
    ('--a', 'a', 'real slope of phi(z) = az + b'),
    ('--b', 'b', 'complex shift, e.g. 1, i, 1+2i, "pi,0" or "[1, 2]"'),
    ('--grid', 'grid_nodes', 'Gauss-Legendre nodes (default 256)'),
    ('--basis-m', 'basis_M', 'finite sections use basis indices -M..M (default 16)'),
    ('--orbit-n', 'orbit_N', 'orbit length N (default 40)'),
    ('--eps-real', 'eps_real', 'tolerance deciding Im b = 0 and |a| = 1 (default 1e-12)'),
    ('--reg', 'reg', 'relative regularization of the span solver (default 1e-12)'),
    ('--seed-kernel', 'seed_kernel', 'orbit seed k_w given by w (default 0)'),
    ('--seed-file', 'seed_file', 'orbit seed read from a node,re,im CSV file'),
    ('--target-kernel', 'target_kernel', 'orbit target k_w given by w'),
    ('--lattice', 'lattice', 'kernel test lattice size per axis (default 5)'),
    ('--pairs', 'pairs', 'random function pairs per identity check (default 20)'),
    ('--random-seed', 'random_seed', 'seed of the random test functions (default 1729)'),
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag, dest, help_text in _OPTIONS:
        common.add_argument(flag, dest=dest, help=help_text, required=dest in ('sigma', 'a'))
    common.add_argument('--output', choices=('json', 'csv', 'text'), help='report format (default json)')
    common.add_argument('--adjoint', action='store_true', default=None, help='use C_phi* instead of C_phi')
    common.add_argument('-v', '--verbose', action='count', default=0, help='log INFO, or DEBUG when repeated')

    parser = argparse.ArgumentParser(prog='pwlab', description='Composition operators on Paley-Wiener spaces')
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('classify', parents=[common], help='decide every verdict for the symbol')
    commands.add_parser('certify', parents=[common], help='run the numerical certificate battery')
    commands.add_parser('orbit', parents=[common], help='dump an orbit and its residual table as CSV')
    commands.add_parser('matrix', parents=[common], help='dump the finite-section matrix as CSV')
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    :raises stereotype.DataError: for values that do not convert or validate
    """
    raw = {dest: getattr(args, dest) for _, dest, _ in _OPTIONS}
    raw['output'] = args.output
    raw['adjoint'] = args.adjoint
    config = RunConfig({key: value for key, value in raw.items() if value is not None})
    config.validate()
    return config


def _envelope(command: str, config: RunConfig, golden: Optional[str] = None) -> Envelope:
    return Envelope({'command': command, 'config': config, 'random_seed': config.random_seed, 'golden_path': golden})


def _write_json(report: Report, stream: TextIO):
    json.dump(report.to_primitive(), stream, indent=2)
    stream.write('\n')


def _writer(stream: TextIO):
    return csv.writer(stream, lineterminator='\n')


def cmd_classify(config: RunConfig, stream: TextIO) -> int:
    classification = classify(config.band, config.a, config.b, config.tolerance())
    if config.output == 'text':
        stream.write('\n'.join(explain(classification)) + '\n')
    elif config.output == 'csv':
        writer = _writer(stream)
        writer.writerow(('verdict', 'value'))
        primitive = classification.to_primitive()
        for key, value in primitive.items():
            if key not in ('sigma', 'a', 'b', 'eps', 'rule_citations'):
                writer.writerow((key, str(value).lower()))
    else:
        report = Report({'envelope': _envelope('classify', config), 'classification': classification})
        report.validate()
        _write_json(report, stream)
    return EXIT_OK


def _write_certificates(certificates: List[Certificate], stream: TextIO, output: str):
    if output == 'text':
        for certificate in certificates:
            expected = f', expected {certificate.expected}' if certificate.expected else ''
            stream.write(f'{certificate.name}: {certificate.verdict} (residual {certificate.residual!r}, '
                         f'{certificate.predicate} {certificate.threshold!r}{expected})\n')
        return
    writer = _writer(stream)
    writer.writerow(('name', 'verdict', 'residual', 'threshold', 'predicate', 'expected', 'consistent'))
    for certificate in certificates:
        residual = '' if certificate.residual is None else repr(certificate.residual)
        writer.writerow((certificate.name, certificate.verdict, residual, repr(certificate.threshold),
                         certificate.predicate, certificate.expected or '', str(certificate.consistent).lower()))


def cmd_certify(config: RunConfig, stream: TextIO) -> int:
    """
    :raises InvalidArgumentError: for unbounded symbols
    :raises OSError: if the golden threshold table cannot be read
    """
    phi = config.symbol()
    path = golden_path()
    certificates = certify_all(config.band, phi, config, load_golden(path))
    report = Report({
        'envelope': _envelope('certify', config, path),
        'classification': classify(config.band, phi.a, phi.b, config.tolerance()),
        'certificates': certificates,
    })
    report.validate()
    if config.output == 'json':
        _write_json(report, stream)
    else:
        _write_certificates(certificates, stream, config.output)
    if not report.consistent:
        logger.warning('Certificates contradict the classifier')
        return EXIT_INCONSISTENT
    return EXIT_OK


def orbit_seed(config: RunConfig) -> Tuple[SpectralFunction, KernelPoint]:
    """The orbit seed, read from ``seed_file`` or built from ``seed_kernel``, and the kernel point it stands for."""
    grid = config.grid()
    point = config.seed_point()
    if config.seed_file is not None:
        with open(config.seed_file, encoding='utf-8', newline='') as stream:
            return read_spectral_csv(grid, stream), point
    return kernel_spectral(point, grid), point


def orbit_target(config: RunConfig, phi: AffineSymbol, point: KernelPoint) -> KernelPoint:
    if config.target_kernel is not None:
        return KernelPoint(config.target_kernel)
    if config.adjoint:
        return KernelPoint(point.w + ADJOINT_TARGET_OFFSET)
    return KernelPoint(point.w + phi.b.conjugate())


def cmd_orbit(config: RunConfig, stream: TextIO) -> int:
    """
    Writes ``n,node,re,im`` rows for ``n = 0..orbit_N``, a blank line, then the ``N,residual,rank`` table of
    distances from the target kernel to the first ``N + 1`` orbit elements.

    :raises OSError: if the seed file cannot be read
    """
    phi = config.symbol()
    seed, point = orbit_seed(config)
    N = config.orbit_N
    if config.adjoint and config.seed_file is None:
        elements = kernel_orbit_elements(phi, point, N, seed.grid)
        for n in (0, N):
            logger.info('Adjoint orbit point %d: %r', n, kernel_orbit_point(phi, point.w, n))
    elif config.adjoint:
        operator = chat_adjoint(phi)
        elements = [seed]
        for _ in range(N):
            elements.append(operator(elements[-1]))
    else:
        elements = orbit_elements(phi, seed, N)
    target = kernel_spectral(orbit_target(config, phi, point), seed.grid)

    writer = _writer(stream)
    writer.writerow(('n', 'node', 're', 'im'))
    for n, element in enumerate(elements):
        for node, value in zip(element.grid.nodes, element.values):
            writer.writerow((n, repr(float(node)), repr(float(value.real)), repr(float(value.imag))))
    stream.write('\n')
    writer.writerow(('N', 'residual', 'rank'))
    for length in range(1, N + 1):
        solution = solve_span(elements[:length + 1], target, config.reg)
        writer.writerow((length, repr(solution.residual), solution.rank))
    return EXIT_OK


def cmd_matrix(config: RunConfig, stream: TextIO) -> int:
    """:raises InvalidArgumentError: if the grid is too coarse for ``basis_M``"""
    phi = config.symbol()
    operator = chat_adjoint(phi) if config.adjoint else chat(phi)
    write_matrix_csv(assemble_matrix(operator, config.basis_M, config.band, config.grid()), stream)
    return EXIT_OK


COMMANDS = {
    'classify': cmd_classify,
    'certify': cmd_certify,
    'orbit': cmd_orbit,
    'matrix': cmd_matrix,
}


def _describe(error: DataError) -> str:
    return '; '.join(f'{": ".join(path)}: {message}' if path else message for path, message in error.error_list)


def main(argv: Optional[Sequence[str]] = None, stream: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=max(logging.WARNING - 10 * args.verbose, logging.DEBUG), stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    stream = sys.stdout if stream is None else stream
    try:
        config = config_from_args(args)
        return COMMANDS[args.command](config, stream)
    except DataError as e:
        print(f'pwlab: invalid configuration: {_describe(e)}', file=sys.stderr)
    except (PwlabError, OSError) as e:
        print(f'pwlab: {e}', file=sys.stderr)
    return EXIT_USAGE


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
