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

from robotlibcore import keyword

from OptimalKernelLibrary.base import LibraryComponent
from OptimalKernelLibrary.estimator import mise_experiment, parse_bandwidth_rule
from OptimalKernelLibrary.utils import parse_number_list, to_float, to_int


class SimulationKeywords(LibraryComponent):

    @keyword
    def run_mise_experiment(self, kernel, target, sizes, rule,
                            replications=20, seed=None):
        """Runs the Monte Carlo MISE experiment and returns its table.

        ``sizes`` is a comma separated list of sample sizes and ``rule`` a
        bandwidth rule such as ``power:1,0.2``. The fitted log-log slope
        is available as ``${table.slope}``.

        Example:
        | ${table} = | `Run MISE Experiment` | ${kernel} | normal | 1024,4096 | power:1,0.2 | seed=7 |
        """
        table = mise_experiment(target, kernel,
                                parse_number_list(sizes, to_int, 'sample size'),
                                parse_bandwidth_rule(rule, kernel),
                                to_int(replications, 'replications'),
                                self.get_seed(seed), workers=self.workers)
        self.info(table.to_tsv())
        return table

    @keyword
    def mise_slope_should_be_between(self, table, lower, upper, message=None):
        """Fails unless the fitted slope of ``table`` is in ``[lower, upper]``."""
        lower, upper = to_float(lower, 'lower'), to_float(upper, 'upper')
        if not lower <= table.slope <= upper:
            raise AssertionError(message or
                                 'MISE slope should have been between %g '
                                 'and %g but was %.17g.'
                                 % (lower, upper, table.slope))
