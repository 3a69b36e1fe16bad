# -----------------------------------------------------------------------------
# /*
#  * Copyright (C) 2025 Squarefree
#  *
#  * This program is free software; you can redistribute it and/or modify
#  * it under the terms of the GNU General Public License as published by
#  * the Free Software Foundation; Version 2.
#  *
#  * This program is distributed in the hope that it will be useful,
#  * but WITHOUT ANY WARRANTY; without even the implied warranty of
#  * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  * GNU General Public License for more details.
#  *
#  * You should have received a copy of the GNU General Public License
#  * along with this program; if not, write to the Free Software Foundation.
#  */
# -----------------------------------------------------------------------------

from __future__ import annotations

from collections.abc import Iterable

from squarefree.constants import SWEEP_COMMANDS, VERIFY_BOX_BOUND
from squarefree.context import GlobalContext
from squarefree.core.algebra.betti import (
    BettiEntry,
    betti_numbers,
    betti_table,
    hochster_betti,
)
from squarefree.core.algebra.exponents import ExponentVector, IndexSet
from squarefree.core.algebra.grading import (
    GradingSolution,
    apply_solution_override,
    canonical_uniform_solution,
    find_squarefree_solution,
    is_minimal_presentation,
    is_uniform_rank,
    lcm_shift_violations,
    permute_rows,
    solve_E_A,
    validate_multigraded,
)
from squarefree.core.algebra.localcohom import (
    PatternResult,
    build_L_complex,
    depth_and_dim_report,
    hochster_local_cohomology,
    local_cohomology_dims,
    pattern_sweep,
)
from squarefree.core.algebra.oracles import cech_oracle, koszul_oracle
from squarefree.core.algebra.reduction import (
    SquarefreeModuleData,
    annihilator as compute_annihilator,
    annihilator_by_intersection,
    annihilator_by_sweep,
    direct_sum_violations,
    k_basis,
    krull_dimension,
    reduce as reduce_element,
    uniform_rank_ideals,
    verify_squarefree_module,
)
from squarefree.core.exceptions import (
    InconsistentMatrixError,
    NoSquarefreeSolutionError,
    VerificationMismatch,
)
from squarefree.core.io.matrix_file import parse, to_matrix
from squarefree.core.io.report import InvariantReport
from squarefree.core.logging.progress_manager import ProgressBarManager
from squarefree.core.logging.utils import sweep_progress, time_block
from squarefree.core.validation import (
    validate_degree_string,
    validate_input_path,
    validate_nonnegative_degree,
    validate_order,
    validate_row_index,
    validate_sweep_size,
)


class InvariantPipeline:
    """Parse -> grade -> initial decomposition -> requested invariants -> report.

    Every stage is computed on first use and cached, so ``full_report`` and
    the single-invariant commands share one code path. With ``verify`` each
    stage also runs its independent oracle and collects mismatches, which
    ``emit`` raises as VerificationMismatch after the report is printed.
    """

    def __init__(
        self,
        context: GlobalContext,
        path: str,
        command: str,
        order: str | None = None,
        verify: bool = False,
    ):
        self.context = context
        self.verify = verify
        self.matrix_file = parse(validate_input_path(path))
        matrix = to_matrix(self.matrix_file)
        row_order = validate_order(order, matrix.s)
        self.matrix = permute_rows(matrix, row_order) if row_order else matrix

        if command in SWEEP_COMMANDS or verify:
            validate_sweep_size(self.matrix.n, context.sweep_limit())

        self.report = InvariantReport(source=str(path), input=self._input_section())
        self.checked = 0
        self.mismatches: list[str] = []
        self.disagreements: list[str] = []
        self._solution: GradingSolution | None = None
        self._data: SquarefreeModuleData | None = None
        self._table: list[BettiEntry] | None = None
        self._patterns: list[PatternResult] | None = None

    # -----------------------------------------------------------------------
    # shared stages
    # -----------------------------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self.matrix.names()

    def _input_section(self) -> dict:
        mf = self.matrix_file
        return {
            "n": mf.n,
            "s": mf.s,
            "l": mf.l,
            "vars": list(self.matrix.names()),
            "row_order": [self.matrix.label(i) for i in range(self.matrix.s, 0, -1)],
            "entries": [
                {"i": i, "j": j, "coefficient": entry.coefficient, "exponent": entry.exponent}
                for (i, j), entry in sorted(mf.entries.items())
            ],
        }

    def _internal_row(self, label: int) -> int:
        return next(i for i in range(1, self.matrix.s + 1) if self.matrix.label(i) == label)

    def _element(self, i: int, exponent: ExponentVector) -> str:
        monomial = exponent.monomial(self.names)
        row = f"v{self.matrix.label(i)}"
        return row if monomial == "1" else f"{monomial}*{row}"

    def _mismatch(self, message: str) -> None:
        from loguru import logger

        logger.error("Verification mismatch: {message}", message=message)
        self.mismatches.append(message)

    def _compare(self, what: str, ours: object, oracle: object) -> None:
        self.checked += 1
        if ours != oracle:
            self._mismatch(f"{what}: computed {ours}, oracle {oracle}")

    def solution(self) -> GradingSolution:
        if self._solution is not None:
            return self._solution
        from loguru import logger

        with time_block("grading"):
            if self.matrix_file.has_solution_override:
                logger.debug("Using the beta/gamma directives of the matrix file")
                solution = apply_solution_override(
                    self.matrix, self.matrix_file.betas, self.matrix_file.gammas
                )
            else:
                check = validate_multigraded(self.matrix)
                if not check.ok:
                    raise InconsistentMatrixError(
                        f"The matrix is not multigraded: {check.witness}",
                        witness=check.witness,
                    )
                solution = find_squarefree_solution(self.matrix)
                if solution is None:
                    general = solve_E_A(self.matrix)
                    raise NoSquarefreeSolutionError(
                        "The degree system has no squarefree solution; general solution:\n  "
                        + "\n  ".join(general.describe(self.names)),
                        general_solution=general,
                    )
                if is_uniform_rank(self.matrix) and all(
                    e.exponent.is_squarefree() for e in self.matrix.entries.values()
                ):
                    solution = canonical_uniform_solution(self.matrix)
        self._solution = solution
        return solution

    def data(self) -> SquarefreeModuleData:
        if self._data is None:
            self._data = SquarefreeModuleData(self.matrix, self.solution())
            if self.report.grading is None:
                self.report.grading = self._grading_section()
            if not is_minimal_presentation(self.matrix):
                from loguru import logger

                warning = "The presentation is not minimal: some entry is a nonzero constant"
                logger.warning(warning)
                self.report.warnings.append(warning)
        return self._data

    def _grading_section(self) -> dict:
        solution = self.solution()
        betas = {self.matrix.label(i): solution.beta(i) for i in range(1, self.matrix.s + 1)}
        return {
            "multigraded": True,
            "squarefree": True,
            "uniform_rank": is_uniform_rank(self.matrix),
            "minimal": is_minimal_presentation(self.matrix),
            "gammas": list(solution.gammas),
            "betas": [betas[label] for label in sorted(betas)],
        }

    # -----------------------------------------------------------------------
    # commands
    # -----------------------------------------------------------------------

    def check(self) -> None:
        """Grading report that never fails on a non-squarefree matrix."""
        grading = validate_multigraded(self.matrix)
        section: dict = {"multigraded": grading.ok, "squarefree": False}
        if not grading.ok:
            section["witness"] = str(grading.witness)
            self.report.grading = section
            return
        if not self.matrix_file.has_solution_override and (
            find_squarefree_solution(self.matrix) is None
        ):
            section["general_solution"] = solve_E_A(self.matrix).describe(self.names)
            section["uniform_rank"] = is_uniform_rank(self.matrix)
            section["minimal"] = is_minimal_presentation(self.matrix)
            self.report.grading = section
            return

        self.report.grading = self._grading_section()
        if self.verify:
            self._verify_structure()

    def _verify_structure(self) -> None:
        data = self.data()
        with time_block("squarefree verification"):
            for failure in verify_squarefree_module(data, VERIFY_BOX_BOUND):
                self._mismatch(failure)
            for delta in direct_sum_violations(data, VERIFY_BOX_BOUND):
                self._mismatch(f"leading rows at {delta} differ from I_1 v_1 ⊕ ... ⊕ I_s v_s")
            self.checked += (VERIFY_BOX_BOUND + 1) ** data.n

        if is_uniform_rank(self.matrix):
            for t, q, f, cols in lcm_shift_violations(self.matrix):
                self._mismatch(f"lcm shift of column {f} over {cols} differs between rows {t} and {q}")
            if data.l >= data.s:
                self._compare(
                    "uniform-rank ideals",
                    uniform_rank_ideals(data).ideals,
                    data.decomposition.ideals,
                )

    def ideals(self) -> None:
        data = self.data()
        with time_block("initial decomposition"):
            decomposition = data.decomposition
        self.report.ideals = [
            {
                "row": self.matrix.label(i),
                "position": i,
                "generators": decomposition.ideal(i).render(self.names),
                "facets": decomposition.complex(i).facets(),
            }
            for i in range(1, data.s + 1)
        ]

    def basis(self, degree_text: str) -> None:
        data = self.data()
        delta = validate_degree_string(degree_text, data.n)
        elements = k_basis(data, delta)
        self.report.basis = {
            "degree": delta,
            "dim": len(elements),
            "elements": [self._element(e.row, e.exponent) for e in elements],
        }

    def reduce(self, row: int, degree_text: str) -> None:
        data = self.data()
        validate_row_index(row, data.s)
        alpha = validate_nonnegative_degree(validate_degree_string(degree_text, data.n))
        i = self._internal_row(row)
        result = reduce_element(data, i, alpha)
        self.report.reduction = {
            "element": self._element(i, alpha),
            "row": row,
            "degree": alpha,
            "standard": result.standard,
            "terms": [
                {
                    "row": self.matrix.label(j),
                    "coefficient": r,
                    "element": self._element(j, alpha + data.beta(i) - data.beta(j)),
                }
                for j, r in sorted(result.coefficients.items(), reverse=True)
            ],
        }

    def annihilator(self) -> None:
        data = self.data()
        if is_uniform_rank(self.matrix):
            method = "zero" if data.l < data.s else "fitting"
        else:
            method = "sweep"
        with time_block("annihilator"):
            ideal = compute_annihilator(data)
        self.report.annihilator = {"generators": ideal.render(self.names), "method": method}

        if self.verify:
            with ProgressBarManager.set_pbar(
                description="Annihilator sweep",
                total=2**data.n,
                silent=self.context.config.silent,
            ):
                swept = annihilator_by_sweep(data)
            self._compare("annihilator (membership sweep)", swept, ideal)
            self._compare("annihilator (I_1 ∩ ... ∩ I_s)", annihilator_by_intersection(data), ideal)

    def dimension(self) -> None:
        self.report.dimension = krull_dimension(self.data())

    def betti(self, degree_text: str | None = None) -> None:
        data = self.data()
        if degree_text is not None:
            alpha = validate_degree_string(degree_text, data.n)
            values = betti_numbers(data, alpha)
            self.report.betti = [
                {"i": i, "degree": alpha, "value": value}
                for i, value in enumerate(values)
                if value
            ]
            if self.verify:
                self._verify_betti([alpha])
            return

        with (
            time_block("Betti table"),
            ProgressBarManager.set_pbar(
                description="Betti table",
                total=2**data.n,
                silent=self.context.config.silent,
            ),
        ):
            self._table = betti_table(data, progress=sweep_progress("alpha"))
        self.report.betti = [
            {"i": entry.i, "degree": entry.degree, "value": entry.value} for entry in self._table
        ]
        if self.verify:
            self._verify_betti(u.indicator(data.n) for u in IndexSet.all_subsets(data.n))

    def _verify_betti(self, degrees: Iterable[ExponentVector]) -> None:
        data = self.data()
        ideal = data.decomposition.ideal(1) if data.s == 1 else None
        with time_block("Koszul oracle"):
            for alpha in degrees:
                ours = betti_numbers(data, alpha)
                self._compare(
                    f"Betti numbers at {alpha}",
                    ours,
                    koszul_oracle(self.matrix, self.solution(), alpha),
                )
                if ideal is not None and alpha.is_squarefree():
                    hochster = [hochster_betti(ideal, data.n, i, alpha) for i in range(data.n + 1)]
                    self._compare(f"Hochster Betti numbers at {alpha}", ours, hochster)

    def localcohom(self, degree_text: str | None = None) -> None:
        from loguru import logger

        data = self.data()
        if degree_text is not None:
            alpha = validate_degree_string(degree_text, data.n)
            built = build_L_complex(data, alpha)
            self.disagreements.extend(d.describe() for d in built.subscript_disagreements)
            dims = local_cohomology_dims(data, alpha)
            self.report.local_cohomology = [{"degree": alpha, "dims": dims}]
            if self.verify:
                self._verify_local_cohomology([(alpha, dims)])
            return

        scale = self.context.config.pattern_check_scale
        with (
            time_block("pattern sweep"),
            ProgressBarManager.set_pbar(
                description="Local cohomology patterns",
                total=3**data.n,
                silent=self.context.config.silent,
            ),
        ):
            self._patterns = pattern_sweep(data, scale=scale, progress=sweep_progress("alpha"))

        self.report.local_cohomology = [
            {
                "pattern_plus": result.plus,
                "pattern_minus": result.minus,
                "dims": result.dims,
                "stable": result.stable,
            }
            for result in self._patterns
        ]
        for result in self._patterns:
            if not result.stable:
                message = (
                    f"local cohomology at {result.representative} differs from "
                    f"{scale} times it"
                )
                if self.verify:
                    self._mismatch(message)
                else:
                    logger.warning(message)
                    self.report.warnings.append(message)

        if self.verify:
            for result in self._patterns:
                built = build_L_complex(data, result.representative)
                self.disagreements.extend(d.describe() for d in built.subscript_disagreements)
            self._verify_local_cohomology(
                (result.representative, result.dims) for result in self._patterns
            )

    def _verify_local_cohomology(
        self, results: Iterable[tuple[ExponentVector, list[int]]]
    ) -> None:
        data = self.data()
        ideal = data.decomposition.ideal(1) if data.s == 1 else None
        with time_block("Čech oracle"):
            for alpha, dims in results:
                self._compare(
                    f"local cohomology at {alpha}",
                    dims,
                    cech_oracle(self.matrix, self.solution(), alpha),
                )
                if ideal is not None:
                    self._compare(
                        f"Hochster local cohomology at {alpha}",
                        dims,
                        hochster_local_cohomology(ideal, data.n, alpha),
                    )

    def full_report(self) -> None:
        self.check()
        if self.report.grading is None or not self.report.grading.get("squarefree"):
            return
        self.ideals()
        self.annihilator()
        self.dimension()
        self.betti()
        self.localcohom()

        depth = depth_and_dim_report(self.data(), self._patterns, self._table)
        self.report.depth = {
            "depth": depth.depth,
            "top": depth.top,
            "krull_dimension": depth.krull_dimension,
            "n_minus_pd": depth.n_minus_pd,
            "consistent": depth.consistent,
        }
        if self.verify:
            self.checked += 1
            if not depth.consistent:
                self._mismatch(
                    f"depth/dimension disagree: H^i nonzero for i in "
                    f"[{depth.depth}, {depth.top}], dim M = {depth.krull_dimension}, "
                    f"n - pd M = {depth.n_minus_pd}"
                )

    # -----------------------------------------------------------------------
    # output
    # -----------------------------------------------------------------------

    def emit(self) -> None:
        """Print the report; raise VerificationMismatch afterwards when needed."""
        if self.verify or self.disagreements:
            self.report.verification = {
                "checked": self.checked,
                "mismatches": list(self.mismatches),
                "subscript_disagreements": sorted(set(self.disagreements)),
            }

        if self.context.json_output:
            print(self.report.to_json())
        else:
            print(self.report.to_text())

        if self.mismatches:
            raise VerificationMismatch(
                f"{len(self.mismatches)} of {self.checked} checks disagreed with an oracle",
                mismatches=list(self.mismatches),
            )
