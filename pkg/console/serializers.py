from rest_framework import serializers

from constructive.models import RUNGS
from minors.serializers import MinorEmbeddingSerializer
from utils.base.validators import validate_positive, validate_probability

from .models import OUTPUT_FORMATS, RunConfig


class RunConfigSerializer(serializers.Serializer):
    """
    Options shared by every command. Field names are the flags without
    their leading dashes, so error paths translate back to flags.
    """
    command = serializers.CharField()
    inputs = serializers.DictField(child=serializers.CharField(), default=dict)
    seed = serializers.IntegerField(default=0)
    budget_nodes = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    budget_secs = serializers.FloatField(
        required=False, allow_null=True, validators=[validate_positive])
    threads = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    format = serializers.ChoiceField(choices=OUTPUT_FORMATS, default=OUTPUT_FORMATS[0])
    verbosity = serializers.IntegerField(min_value=0, max_value=3, default=1)

    def create(self, validated_data):
        return RunConfig(
            command=validated_data['command'],
            inputs=validated_data['inputs'],
            seed=validated_data['seed'],
            nodes=validated_data.get('budget_nodes'),
            seconds=validated_data.get('budget_secs'),
            threads=validated_data.get('threads'),
            output=validated_data['format'],
            verbosity=validated_data['verbosity'],
        )


class GraphReportSerializer(serializers.Serializer):
    name = serializers.CharField()
    graph6 = serializers.CharField()
    n = serializers.IntegerField(min_value=0)
    edges = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)))


class MinorReportSerializer(serializers.Serializer):
    found = serializers.BooleanField()
    embedding = MinorEmbeddingSerializer(allow_null=True)
    violations = serializers.IntegerField(min_value=0)


class FuzzFailureSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    status = serializers.CharField()
    detail = serializers.CharField()
    replay = serializers.CharField()


class FuzzReportSerializer(serializers.Serializer):
    pattern = serializers.CharField()
    seed = serializers.IntegerField()
    trials = serializers.IntegerField(min_value=0)
    max_internal = serializers.IntegerField(min_value=0)
    extra_edge_prob = serializers.FloatField(validators=[validate_probability])
    kempe_complete = serializers.BooleanField()
    passed = serializers.IntegerField(min_value=0)
    budget_exceeded = serializers.IntegerField(min_value=0)
    failures = FuzzFailureSerializer(many=True)


class SweepRowSerializer(serializers.Serializer):
    graph6 = serializers.CharField()
    n = serializers.IntegerField(min_value=1)
    m = serializers.IntegerField(min_value=0)
    rung = serializers.ChoiceField(choices=RUNGS)
    path = serializers.CharField()
    verified = serializers.BooleanField()


class SweepReportSerializer(serializers.Serializer):
    max_n = serializers.IntegerField(min_value=1)
    total = serializers.IntegerField(min_value=0)
    verified = serializers.IntegerField(min_value=0)
    solver_fallbacks = serializers.IntegerField(min_value=0)
    rows = SweepRowSerializer(many=True)


class RemarkFailureSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    planar = serializers.BooleanField()
    has_k5_minor = serializers.BooleanField()
    replay = serializers.CharField()


class RemarkAggregateSerializer(serializers.Serializer):
    pattern = serializers.CharField()
    seed = serializers.IntegerField()
    trials = serializers.IntegerField(min_value=0)
    premises_ok = serializers.IntegerField(min_value=0)
    nonplanar = serializers.IntegerField(min_value=0)
    k5_minors = serializers.IntegerField(min_value=0)
    consistent = serializers.IntegerField(min_value=0)
    budget_exceeded = serializers.IntegerField(min_value=0)
    failures = RemarkFailureSerializer(many=True)
