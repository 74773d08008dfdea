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

from .bandwidth import (BandwidthRule, FixedBandwidth, MiseOptimalBandwidth,
                        PowerBandwidth, bound_minimizer, mise_bound,
                        mise_optimal_bandwidth,
                        mise_optimal_derivative_bandwidth,
                        parse_bandwidth_rule)
from .dataset import Dataset, read_dataset
from .estimate import DensityEstimate
from .mise import (MISE_GRID, TARGETS, MiseTable, TargetDensity,
                   builtin_target, mise_experiment)
from .parzen import (derivative_estimate, interval_transform_estimate,
                     kernel_summary, log_transform_estimate,
                     parzen_rosenblatt, product_estimate)
from .recursive import WolvertonWagnerEstimator, wolverton_wagner
