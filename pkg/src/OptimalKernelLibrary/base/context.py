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


class ContextAware(object):

    def __init__(self, ctx):
        """Base class exposing attributes from the common context.

        :param ctx: The library itself as a context object.
        :type ctx: OptimalKernelLibrary.OptimalKernelLibrary
        """
        self.ctx = ctx

    @property
    def rule(self):
        """Gauss-Legendre rule for polynomial integrands."""
        return self.ctx.rule

    @property
    def split_rule(self):
        """Gauss-Legendre rule used on each half of a split interval."""
        return self.ctx.split_rule

    @property
    def tolerance(self):
        return self.ctx.tolerance

    @property
    def workers(self):
        return self.ctx.workers
