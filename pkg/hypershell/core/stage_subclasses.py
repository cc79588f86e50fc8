# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
#
from .braid import group_type
from .constants import BRAID_CAP, ITERATION_CAP, STABILIZER_CAP
from .Exceptions import PreconditionUnmet
from .families import top_status
from .invariants import (FAIL, check_failure, control_traces, cusp_bounds,
                         is_cocompact, signature_spectrum, trace_field,
                         verify_relations)
from .realize import NOT_EMBEDDED, realize_shell, vertex_stabilizers
from .Shell import build_shell
from .Stage import Stage

from collections import namedtuple


def _entry(context):
    """the catalog entry of the group, None for groups built from a bare spec
    or when expectations are turned off"""
    spec = context['group'].spec
    if not context['options'].get('expect', True):
        return None
    return spec if hasattr(spec, 'chi') else None


def _failure_kind(entry):
    if entry is None or entry.failure is None:
        return None
    return entry.failure.kind


################################################################################
class TypeStage(Stage):
    """computes the triangle group type a,b,c;d,e,f;g"""
    stage_name = 'type'

    def process(self, context):
        G = context['group']
        cap = context['options'].get('braid_cap', BRAID_CAP)
        gtype = group_type(G, cap)

        entry = _entry(context)
        if entry is not None and entry.type_string:
            self.expect(context, 'type', entry.type_string, str(gtype))
        return gtype


################################################################################
class ShellStage(Stage):
    """builds the invariant shell"""
    stage_name = 'shell'
    requires = ('type',)

    def process(self, context):
        G = context['group']
        opts = context['options']
        shell = build_shell(G,
                            opts.get('braid_cap', BRAID_CAP),
                            opts.get('iteration_cap', ITERATION_CAP))

        entry = _entry(context)
        if entry is not None and entry.combinatorics and entry.failure is None:
            expected = sorted((row.base, row.count)
                              for row in entry.combinatorics)
            actual = sorted((cls.n, cls.count)
                            for cls in shell.orbit_classes())
            self.expect(context, 'combinatorics', expected, actual)
        elif _failure_kind(entry) == 'fixed_point_on_ridge':
            found = check_failure(G, entry.failure, shell=shell)
            self.expect(context, 'failure', found.kind,
                        found.kind if found.reproduced else 'not reproduced',
                        found.reproduced)
        return shell


################################################################################
class RealizeStage(Stage):
    """realizes the shell, checks embeddedness and writes SVG drawings"""
    stage_name = 'realize'
    requires = ('shell',)

    def process(self, context):
        G = context['group']
        opts = context['options']
        realization = realize_shell(context['shell'], opts.get('precision'))
        if opts.get('svg'):
            realization.write_svgs(opts['svg'])

        entry = _entry(context)
        if entry is None:
            return realization

        if _failure_kind(entry) == 'not_embedded':
            bad = [label for label, status in realization.embedded.items()
                   if status == NOT_EMBEDDED]
            self.expect(context, 'failure', 'not_embedded',
                        'not_embedded' if bad else 'embedded', bool(bad))
        elif entry.failure is None:
            self.expect(context, 'embedded', True, realization.all_embedded)

        if entry.combinatorics and entry.failure is None:
            expected = sorted((row.base, row.count, top_status(row, G.p))
                              for row in entry.combinatorics)
            actual = sorted((n, count, top)
                            for n, count, top, _ in realization.rows())
            self.expect(context, 'top_status', expected, actual)
        return realization


################################################################################
InvariantReport = namedtuple('InvariantReport',
                             ['traces', 'field', 'spectrum', 'cocompact',
                              'cusp'])
"""output of the invariants stage; cocompact is None without a realization
and cusp is None when the cusp bounds do not apply"""


class InvariantsStage(Stage):
    """computes the commensurability invariants"""
    stage_name = 'invariants'
    requires = ('type',)
    uses = ('realize',)

    def process(self, context):
        G = context['group']
        traces = control_traces(G)
        field = trace_field(G)
        spectrum = signature_spectrum(G, field)

        realization = context.get('realize')
        cocompact = None
        if realization is not None:
            cocompact = is_cocompact(G, realization)

        try:
            cusp = cusp_bounds(G)
        except PreconditionUnmet:
            cusp = None

        self.expect(context, 'control_traces', True,
                    all(r.is_zero() for r in traces.residuals.values()))
        entry = _entry(context)
        if entry is not None:
            self.expect(context, 'field', entry.field, field.name)
            self.expect(context, 'na_index', entry.na_index, spectrum.na_index)
            if cocompact is not None and entry.failure is None:
                self.expect(context, 'cocompact', entry.cocompact, cocompact)
        return InvariantReport(traces, field, spectrum, cocompact, cusp)


################################################################################
VerifyReport = namedtuple('VerifyReport',
                          ['relations', 'stabilizers', 'failure'])


class VerifyStage(Stage):
    """checks presentations, vertex stabilizers and documented failures"""
    stage_name = 'verify'
    requires = ('type',)
    uses = ('shell', 'realize')

    def process(self, context):
        G = context['group']
        entry = _entry(context)
        spec = G.spec

        relations = verify_relations(G)
        failed = [r.relation for r in relations if r.status == FAIL]
        self.expect(context, 'relations', [], failed)

        stabilizers = []
        rows = getattr(spec, 'stabilizers', [])
        if rows:
            cap = context['options'].get('stabilizer_cap', STABILIZER_CAP)
            stabilizers = vertex_stabilizers(G, rows, cap)
            if entry is not None:
                for check in stabilizers:
                    if check.starred:
                        continue
                    self.expect(context, 'stabilizer ' + check.vertex,
                                check.expected, check.order)

        failure = None
        if entry is not None and entry.failure is not None:
            failure = self._check_failure(context, G, entry)
        return VerifyReport(relations, stabilizers, failure)

    def _check_failure(self, context, G, entry):
        kind = entry.failure.kind
        if kind == 'not_embedded' and context.get('realize') is None:
            return None
        failure = check_failure(G, entry.failure,
                                shell=context.get('shell'),
                                realization=context.get('realize'))
        self.expect(context, 'failure', kind,
                    kind if failure.reproduced else 'not reproduced',
                    failure.reproduced)
        return failure


################################################################################
def default_stages():
    """one instance of every analysis stage, in canonical order"""
    return [TypeStage(), ShellStage(), RealizeStage(), InvariantsStage(),
            VerifyStage()]

# END
