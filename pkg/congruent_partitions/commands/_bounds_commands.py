#  Copyright The congruent-partitions Authors. All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License").
#    You may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

from congruent_partitions import LOGGER
from congruent_partitions.bounds import check_relations, enumerate_feasible, k_upper_bound, summarize_feasible
from congruent_partitions.commands._report import CommandReport
from congruent_partitions.partition import LayoutStats


def bounds_check(p: int, n: int, k: int, r: int, m: int) -> CommandReport:
    relations = check_relations(LayoutStats(p=p, n=n, k=k, r=r, m=m, edge_to_edge=True))
    verdict = relations.ineq1_holds and relations.eq2_holds
    report = CommandReport(
        verdict,
        [
            f"(1) {n * k} >= {3 * m + 2 * r + p}: {'holds' if relations.ineq1_holds else 'fails'}",
            f"(2) {n * (k - 2)} = {2 * m + r + p - 2}: {'holds' if relations.eq2_holds else 'fails'}",
            f"(3) {(6 - k) * n} >= {r - p + 6}: {'holds' if relations.ineq3_holds else 'fails'}",
            f"alpha = k - p = {relations.alpha}; k <= {k_upper_bound(p, n)} for r = 0",
        ],
    )
    for key, value in relations._asdict().items():
        report.add(key, value)
    report.add("k_upper_bound", k_upper_bound(p, n))
    return report


def bounds_enumerate(max_p: int, max_n: int, max_r: int, min_alpha: int = 1, table: bool = True) -> CommandReport:
    feasible = enumerate_feasible(max_p, max_n, max_r, min_alpha)
    summary = summarize_feasible(feasible)
    LOGGER.info("%s feasible tuples, maximum p %s", summary.count, summary.max_p)
    lines = [f"feasible tuples for p <= {max_p}, n <= {max_n}, r <= {max_r}, alpha >= {min_alpha}"]
    if table:
        lines.append("p n k r m")
        lines += [f"{t.p} {t.n} {t.k} {t.r} {t.m}" for t in feasible]
    lines.append(f"maximum p = {summary.max_p}, maximum k = {summary.max_k}")
    report = CommandReport(summary.count > 0, lines)
    report.add("count", summary.count)
    report.add("max_p", summary.max_p)
    report.add("max_k", summary.max_k)
    return report
