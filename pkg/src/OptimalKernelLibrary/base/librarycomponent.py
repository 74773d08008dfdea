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

import os

from robot.api import logger
from robot.libraries.BuiltIn import BuiltIn, RobotNotRunningError

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.utils import is_noney, to_float, to_int

from .context import ContextAware


class LibraryComponent(ContextAware):

    def info(self, msg, html=False):
        logger.info(msg, html)

    def debug(self, msg, html=False):
        logger.debug(msg, html)

    def log(self, msg, level='INFO', html=False):
        if not is_noney(level):
            logger.write(msg, level.upper(), html)

    def warn(self, msg, html=False):
        logger.warn(msg, html)

    def assert_within(self, name, value, expected, tolerance=None,
                      message=None):
        tolerance = self.get_tolerance(tolerance)
        if not abs(value - expected) <= tolerance:
            if is_noney(message):
                message = ('%s should have been %.17g within %g but was '
                           '%.17g.' % (name, expected, tolerance, value))
            raise AssertionError(message)
        logger.info('%s is %.17g.' % (name, value))

    def assert_residuals(self, residuals, tolerance=None, message=None):
        tolerance = self.get_tolerance(tolerance)
        failing = [item for item in residuals
                   if not abs(item.residual) <= tolerance]
        if failing:
            if is_noney(message):
                message = ('Kernel should have satisfied its constraints '
                           'within %g but %s.' % (tolerance, ', '.join(
                               '%s had residual %.17g' % (item.name,
                                                          item.residual)
                               for item in failing)))
            raise AssertionError(message)
        logger.info('All %d constraint residuals are within %g.'
                    % (len(residuals), tolerance))

    def get_tolerance(self, tolerance=None):
        if is_noney(tolerance):
            return self.ctx.tolerance
        return to_float(tolerance, 'tolerance')

    def get_seed(self, seed=None):
        if is_noney(seed):
            seed = self.ctx.seed
        if is_noney(seed):
            raise ParameterError('Seed is required. Give it as an argument '
                                 'or when importing the library.')
        return to_int(seed, 'seed')

    @property
    def log_dir(self):
        try:
            logfile = BuiltIn().get_variable_value('${LOG FILE}')
            if logfile == 'NONE':
                return BuiltIn().get_variable_value('${OUTPUTDIR}')
            return os.path.dirname(logfile)
        except RobotNotRunningError:
            return os.getcwd()
