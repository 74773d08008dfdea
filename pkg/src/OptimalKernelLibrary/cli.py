# Copyright 2020-     OptimalKernelLibrary contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line interface of OptimalKernelLibrary.

Sub-commands:

    kernel    construct a kernel and print its table and descriptor
    verify    cross-check a closed-form kernel against the QP oracle
    estimate  estimate a density or density derivative from a data file
    mise      run the Monte Carlo MISE experiment

Exit codes are 0 on success, 1 on usage errors, 2 on data errors and
3 when verification fails.

Examples:

    optimal-kernel kernel --m 1
    optimal-kernel verify --m 2 --paper-literal-theta
    optimal-kernel estimate --input data.csv --m 1 --h 0.5 --grid=-4:4:801
    optimal-kernel mise --m 1 --target normal --seed 7 --n 1024,4096,16384
"""

import argparse
import json
import sys
import textwrap

import numpy as np

from OptimalKernelLibrary.errors import (DataError,
                                         OptimalKernelLibraryException,
                                         ParameterError, UsageError)
from OptimalKernelLibrary.estimator import (FixedBandwidth,
                                            WolvertonWagnerEstimator,
                                            derivative_estimate,
                                            interval_transform_estimate,
                                            log_transform_estimate,
                                            mise_experiment,
                                            parse_bandwidth_rule,
                                            parzen_rosenblatt, read_dataset)
from OptimalKernelLibrary.kernels import (MONOMIAL, build_deriv_kernel,
                                          build_frac_kernel,
                                          build_poly_kernel,
                                          kernel_descriptor, kernel_table,
                                          moment_residuals, v2_printed)
from OptimalKernelLibrary.utils import (is_truthy, parse_grid_spec,
                                        parse_interval, parse_number_list,
                                        to_float, to_int)
from OptimalKernelLibrary.variational import (free_theta_target,
                                              higher_order_kernel,
                                              oracle_report,
                                              solve_with_free_theta,
                                              verify_frac_kernel,
                                              verify_poly_kernel)


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_VERIFICATION = 3

DEFAULT_SIZES = ','.join(str(2 ** power) for power in range(10, 17))
DEFAULT_GRID_COUNT = 512
HIGHER_ORDER = 'higher-order'
LEGENDRE = 'legendre'


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = ArgumentParser(
        prog='optimal-kernel',
        description=textwrap.dedent(__doc__),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--config', metavar='FILE',
                        help='key = value file mirroring long flag names; '
                             'flags given on the command line win')
    commands = parser.add_subparsers(dest='command', metavar='command',
                                     parser_class=ArgumentParser)
    commands.required = True

    kernel = commands.add_parser('kernel', help='construct and export a '
                                                'kernel')
    _add_order_arguments(kernel)
    kernel.add_argument('--r', type=int, default=0,
                        help='derivative order of the kernel (with --m)')
    kernel.add_argument('--paper-literal-theta', action='store_true',
                        help='use the printed support half-width')
    kernel.add_argument('--count', type=int, default=201,
                        help='number of table rows (default 201)')
    kernel.add_argument('--format', choices=('tsv', 'json', 'both'),
                        default='both', dest='output_format')
    kernel.add_argument('--output', metavar='PATH')
    kernel.set_defaults(handler=cmd_kernel)

    verify = commands.add_parser('verify', help='cross-check a kernel '
                                                'against the oracle')
    _add_order_arguments(verify)
    verify.add_argument('--paper-literal-theta', action='store_true')
    verify.add_argument('--trials', type=int, default=200)
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--workers', type=int, default=1)
    verify.add_argument('--output', metavar='PATH')
    verify.set_defaults(handler=cmd_verify)

    estimate = commands.add_parser('estimate', help='estimate a density '
                                                    'from a data file')
    _add_order_arguments(estimate)
    estimate.add_argument('--input', metavar='PATH',
                          help='CSV or JSONL file with the observations')
    estimate.add_argument('--column', default='0',
                          help='CSV column index or header name')
    estimate.add_argument('--h', help='fixed bandwidth')
    estimate.add_argument('--h-rule', help="bandwidth rule 'fixed:h', "
                                           "'power:c,gamma' or 'mise:beta'")
    estimate.add_argument('--grid', help="evaluation grid 'min:max:count'; "
                                         "by default the data range plus "
                                         "the kernel support")
    estimate.add_argument('--grid-count', type=int,
                          default=DEFAULT_GRID_COUNT)
    estimate.add_argument('--deriv', type=int, default=0,
                          help='estimate the r-th derivative')
    estimate.add_argument('--recursive', action='store_true',
                          help='recursive Wolverton-Wagner estimate')
    estimate.add_argument('--log-transform', action='store_true',
                          help='positive data, estimated through ln(x)')
    estimate.add_argument('--interval', help="data confined to 'a:b'")
    estimate.add_argument('--format', choices=('tsv', 'json'),
                          default='tsv', dest='output_format')
    estimate.add_argument('--output', metavar='PATH')
    estimate.set_defaults(handler=cmd_estimate)

    mise = commands.add_parser('mise', help='Monte Carlo MISE experiment')
    _add_order_arguments(mise)
    mise.add_argument('--target', help="built-in target density 'normal' "
                                       "or 'mixture'")
    mise.add_argument('--seed', type=int)
    mise.add_argument('--n', default=DEFAULT_SIZES,
                      help='comma separated sample sizes (default 2^10 '
                           'to 2^16)')
    mise.add_argument('--replications', type=int, default=20)
    mise.add_argument('--h-rule', help='bandwidth rule (default '
                                       'power:1,1/(2 order + 1))')
    mise.add_argument('--form', choices=(HIGHER_ORDER, LEGENDRE),
                      default=HIGHER_ORDER,
                      help='kernel used with --m (default higher-order)')
    mise.add_argument('--grid', default='-8:8:2001')
    mise.add_argument('--workers', type=int, default=1)
    mise.add_argument('--output', metavar='PATH')
    mise.set_defaults(handler=cmd_mise)
    return parser


def _add_order_arguments(parser):
    parser.add_argument('--m', type=int, help='integer order 2m')
    parser.add_argument('--beta', help='fractional order, e.g. 1.5 or 3/2')


def read_config(path):
    """Reads ``key = value`` lines into a dictionary keyed by flag dest."""
    values = {}
    try:
        with open(path, encoding='utf-8') as source:
            lines = source.read().splitlines()
    except OSError as error:
        raise DataError("Reading config file '%s' failed: %s"
                        % (path, error))
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        key, separator, value = line.partition('=')
        if not separator:
            raise UsageError("Invalid line %d in config file '%s': %s"
                             % (number, path, line))
        values[key.strip().lstrip('-').replace('-', '_')] = value.strip()
    return values


def parse_arguments(argv=None):
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    preliminary = argparse.ArgumentParser(add_help=False)
    preliminary.add_argument('--config')
    known, _ = preliminary.parse_known_args(argv)
    if known.config:
        _apply_config(parser, read_config(known.config))
    return parser.parse_args(argv)


def _apply_config(parser, values):
    commands = next(action for action in parser._actions
                    if isinstance(action, argparse._SubParsersAction))
    known = set()
    for subparser in commands.choices.values():
        actions = dict((action.dest, action) for action in subparser._actions)
        defaults = {}
        for key, value in values.items():
            if key in actions:
                known.add(key)
                if isinstance(actions[key], argparse._StoreTrueAction):
                    value = is_truthy(value)
                defaults[key] = value
        subparser.set_defaults(**defaults)
    unknown = sorted(set(values) - known)
    if unknown:
        raise UsageError('Unknown config key(s): %s.' % ', '.join(unknown))


def main(argv=None):
    try:
        args = parse_arguments(argv)
        return args.handler(args)
    except (UsageError, ParameterError) as error:
        _error(error)
        return EXIT_USAGE
    except (DataError, OSError) as error:
        _error(error)
        return EXIT_DATA
    except OptimalKernelLibraryException as error:
        _error(error)
        return EXIT_VERIFICATION


def cmd_kernel(args):
    _require_one_order(args)
    if args.beta is not None:
        if args.r:
            raise UsageError('--r can only be used with --m.')
        kernel = build_frac_kernel(to_float(args.beta, 'beta'))
    elif args.r:
        kernel = build_deriv_kernel(args.m, args.r)
    else:
        kernel = build_poly_kernel(args.m, args.paper_literal_theta)
    descriptor = kernel_descriptor(kernel)
    if kernel.kind == 'poly' and not kernel.r:
        descriptor['v2_printed'] = v2_printed(kernel.m, kernel.theta)
    if kernel.kind == 'poly' and kernel.r:
        _, solution = solve_with_free_theta(kernel.m, kernel.r, MONOMIAL)
        alternative = solution.to_kernel(
            kernel.m, free_theta_target(kernel.m, kernel.r, MONOMIAL))
        report = oracle_report(solution)
        report['moment_residuals'] = dict(
            (item.name, item.residual)
            for item in moment_residuals(alternative))
        descriptor['qp_alternative'] = report
    parts = []
    if args.output_format in ('tsv', 'both'):
        parts.append(kernel_table(kernel, args.count))
    if args.output_format in ('json', 'both'):
        parts.append(_json(descriptor))
    _emit('\n'.join(parts), args.output)
    return EXIT_OK


def cmd_verify(args):
    _require_one_order(args)
    if args.beta is not None:
        report = verify_frac_kernel(to_float(args.beta, 'beta'), args.trials,
                                    args.seed, args.workers)
    else:
        report = verify_poly_kernel(args.m, args.paper_literal_theta,
                                    args.trials, args.seed, args.workers)
    _emit(_json(report), args.output)
    return EXIT_OK if report['passed'] else EXIT_VERIFICATION


def cmd_estimate(args):
    _require_one_order(args)
    if not args.input:
        raise UsageError('--input is required.')
    if (args.h is None) == (args.h_rule is None):
        raise UsageError('Exactly one of --h and --h-rule must be given.')
    transforms = [flag for flag, used in (('--deriv', args.deriv),
                                          ('--log-transform',
                                           args.log_transform),
                                          ('--interval', args.interval),
                                          ('--recursive', args.recursive))
                  if used]
    if len(transforms) > 1:
        raise UsageError('Options %s cannot be combined.'
                         % ' and '.join(transforms))
    if args.beta is not None and args.deriv >= 1:
        raise UsageError('Derivative estimation needs --m.')
    kernel = build_poly_kernel(args.m) if args.beta is None \
        else build_frac_kernel(to_float(args.beta, 'beta'))
    data = read_dataset(args.input, args.column)
    rule = FixedBandwidth(args.h) if args.h is not None \
        else parse_bandwidth_rule(args.h_rule, kernel)
    if args.recursive:
        reach = kernel.theta * max(rule(1), rule(data.n))
        grid = _grid(args, data.values, reach)
        estimate = WolvertonWagnerEstimator(kernel, rule, grid)
        result = estimate.update_all(data.values).estimate()
    else:
        h = rule(data.n)
        reach = kernel.theta * h
        if args.log_transform:
            result = log_transform_estimate(
                data, kernel, h, _grid(args, data.values, reach, np.log,
                                       np.exp))
        elif args.interval:
            lower, upper = parse_interval(args.interval)
            forward, backward = _logit(lower, upper)
            result = interval_transform_estimate(
                data, kernel, h, _grid(args, data.values, reach, forward,
                                       backward), lower, upper)
        elif args.deriv:
            if hasattr(rule, 'validate_derivative'):
                rule.validate_derivative(args.deriv)
            result = derivative_estimate(data, kernel, args.deriv, h,
                                         _grid(args, data.values, reach))
        else:
            result = parzen_rosenblatt(data, kernel, h,
                                       _grid(args, data.values, reach))
    text = result.to_json() + '\n' if args.output_format == 'json' \
        else result.to_tsv()
    _emit(text, args.output)
    return EXIT_OK


def cmd_mise(args):
    _require_one_order(args)
    if args.seed is None:
        raise UsageError('--seed is required.')
    if not args.target:
        raise UsageError('--target is required.')
    if args.beta is not None:
        kernel = build_frac_kernel(to_float(args.beta, 'beta'))
    elif args.form == LEGENDRE:
        kernel = build_poly_kernel(args.m)
    else:
        kernel = higher_order_kernel(args.m)
    order = kernel.order
    rule = parse_bandwidth_rule(args.h_rule or 'power:1,%r'
                                % (1.0 / (2 * order + 1)), kernel)
    table = mise_experiment(args.target, kernel,
                            parse_number_list(args.n, to_int, 'sample size'),
                            rule, args.replications, args.seed,
                            parse_grid_spec(args.grid), args.workers)
    _emit(table.to_tsv(), args.output)
    return EXIT_OK


def _require_one_order(args):
    if (args.m is None) == (args.beta is None):
        raise UsageError('Exactly one of --m and --beta must be given.')


def _grid(args, values, reach, forward=None, backward=None):
    if args.grid:
        return parse_grid_spec(args.grid)
    if forward is not None:
        values = forward(values)
    grid = np.linspace(np.min(values) - reach, np.max(values) + reach,
                       args.grid_count)
    return backward(grid) if backward is not None else grid


def _logit(lower, upper):
    def forward(t):
        return np.log((t - lower) / (upper - t))

    def backward(s):
        return lower + (upper - lower) / (1.0 + np.exp(-s))
    return forward, backward


def _json(value):
    return json.dumps(value, indent=2, sort_keys=True)


def _emit(text, path):
    if not text.endswith('\n'):
        text += '\n'
    if path:
        with open(path, 'w', encoding='utf-8') as output:
            output.write(text)
    else:
        sys.stdout.write(text)


def _error(error):
    sys.stderr.write('[ ERROR ] %s\n' % error)


if __name__ == '__main__':
    sys.exit(main())
