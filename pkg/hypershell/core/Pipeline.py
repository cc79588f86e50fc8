# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
from ..Logger import get_logger
from .constants import STAGE_NAMES, UUID_ORDER
from .Exceptions import (HypothesisFailure, PipelineError, PreconditionUnmet,
                         StageError)
from .Stage import Stage
from .stage_subclasses import default_stages
from .util import Timer

from collections import OrderedDict
from uuid import uuid4
import networkx as nx


class Pipeline(object):
    """stage manager for the analysis of one triangle group

    Stages are nodes of a directed graph. An edge a -> b exists when stage b
    lists a in its `requires` or `uses`. Running a stage runs every
    predecessor first, in topological order.

    Attributes:
        uuid(str): hex uuid for this pipeline
        name(str): user specified name for this pipeline, used to generate
            the unique id. defaults to "Pipeline" or the name of your subclass
        logger(:obj:`HypershellLogger`): Logger object for this pipeline
        graph(:obj:`networkx.DiGraph`): directed stage graph, nodes are stage
            names and carry the Stage object under 'stage'

    Example:
        >>> import hypershell as hs
        >>>
        >>> pipeline = hs.Pipeline()
        >>> G = hs.build_group('S(4,sigmabar4)')
        >>> context = pipeline.process(G, ['type'])
        >>> str(context['type'])
        '4,4,4;3,3,3;7'
    """
    def __init__(self, stages=None, name=None):
        self.uuid = uuid4().hex
        if name is None:
            name = self.__class__.__name__
        self.name = name

        self.logger = get_logger(self.id)
        self.graph = nx.DiGraph()

        if stages is None:
            stages = default_stages()
        self.update(stages)

    ############################################################################
    def update(self, stages):
        """adds stages to the graph, replacing stages of the same name

        Raises:
            StageError: if a stage depends on a stage that is not present
            PipelineError: if the dependencies form a cycle
        """
        for stage in stages:
            if not isinstance(stage, Stage):
                msg = "'{}' is not a Stage".format(stage)
                self.logger.error(msg)
                raise StageError(msg)
            if stage.name in self.graph:
                self.graph.remove_node(stage.name)
            self.graph.add_node(stage.name, stage=stage)

        for name, attrs in self.graph.nodes(data=True):
            stage = attrs['stage']
            for dep in stage.requires + stage.uses:
                if dep not in self.graph:
                    msg = "stage '{}' depends on missing stage '{}'".format(
                                                                    name, dep)
                    self.logger.error(msg)
                    raise StageError(msg)
                self.graph.add_edge(dep, name, required=dep in stage.requires)

        if not nx.is_directed_acyclic_graph(self.graph):
            msg = "stage dependencies contain a cycle"
            self.logger.error(msg)
            raise PipelineError(msg)
        return self

    ############################################################################
    def process(self, group, stages=None, options=None):
        """runs the requested stages on a triangle group

        Args:
            group(:obj:`TriangleGroup`): the group to analyse
            stages(list): names of the stages to run, defaults to all of them.
                Predecessors of the requested stages are always run
            options(dict): stage options (braid_cap, iteration_cap,
                stabilizer_cap, precision, svg, expect)

        Returns:
            dict: the context. It holds the output of each stage under the
                stage name together with 'failures' (stage name ->
                exception), 'skipped', 'expectations' and 'timings'
        """
        if stages is None:
            stages = list(self.graph.nodes)

        wanted = set()
        for name in stages:
            if name not in self.graph:
                msg = "unknown stage '{}'".format(name)
                self.logger.error(msg)
                raise StageError(msg)
            wanted.add(name)
            wanted.update(self.get_predecessors(name))

        context = {'group': group,
                   'spec': group.spec,
                   'options': dict(options or {}),
                   'failures': OrderedDict(),
                   'skipped': [],
                   'expectations': [],
                   'timings': OrderedDict(),
                   }

        for name in self.execution_order:
            if name not in wanted:
                continue
            self._compute(name, context)

        return context

    def _compute(self, name, context):
        """runs one stage, recording algorithm failures in the context"""
        stage = self.graph.nodes[name]['stage']
        blocked = [dep for dep in stage.requires
                   if dep in context['failures'] or dep in context['skipped']]
        if blocked:
            self.logger.warning("skipping '{}': {} did not complete".format(
                                                name, ', '.join(blocked)))
            context['skipped'].append(name)
            return

        timer = Timer()
        try:
            context[name] = stage._pipeline_process(context, self.logger)
        except (HypothesisFailure, PreconditionUnmet) as err:
            self.logger.warning("'{}' failed: {}".format(name, err))
            context['failures'][name] = err
        context['timings'][name] = timer.time()

    ############################################################################
    #                               util
    ############################################################################
    def get_predecessors(self, name):
        """fetches the names of the stages which must run before the given
        stage

        Returns:
            set: an unordered set of stage names
        """
        return set(nx.ancestors(self.graph, name))

    def get_successors(self, name):
        """fetches the names of the stages which depend on the given stage

        Returns:
            set: an unordered set of stage names
        """
        return set(nx.descendants(self.graph, name))

    def rename(self, name):
        """renames the Pipeline to the given name. The id is reset in this
        process"""
        if not isinstance(name, str):
            msg = "name must be string"
            self.logger.error(msg)
            raise PipelineError(msg)

        old_name = self.name
        self.name = name
        self.logger = get_logger(self.id)
        self.logger.warning("renamed from '%s' to '%s'" % (old_name, self.name))
        return self

    ############################################################################
    #                               special
    ############################################################################
    def __getstate__(self):
        return self.__dict__

    def __setstate__(self, state):
        """resets the uuid in the event of a copy"""
        state['uuid'] = uuid4().hex
        self.__dict__.update(state)
        self.logger = get_logger(self.id)

    def __repr__(self):
        return "{}({})".format(self.id, ', '.join(self.execution_order))

    ############################################################################
    #                               properties
    ############################################################################
    @property
    def id(self):
        """str: an unique id for this pipeline

        This id is a combination of the pipeline's non-unique name and part of
        its uuid (last UUID_ORDER characters)
        """
        return "{}#{}".format(self.name, self.uuid[-UUID_ORDER:])

    @property
    def execution_order(self):
        """list: stage names in topological order, ties broken by the
        canonical stage order"""
        def _key(name):
            if name in STAGE_NAMES:
                return "{:02d}".format(STAGE_NAMES.index(name))
            return "99" + name
        return list(nx.lexicographical_topological_sort(self.graph, key=_key))

    @property
    def stages(self):
        """list: Stage objects in execution order"""
        return [self.graph.nodes[n]['stage'] for n in self.execution_order]

# END
