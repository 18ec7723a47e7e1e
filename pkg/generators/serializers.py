from rest_framework import serializers

from graphs.models import Graph
from graphs.serializers import GraphSerializer
from utils.base.constants import FAMILY_NAMES
from utils.base.validators import validate_even, validate_probability

from .models import FamilySpec, PathSystemSpec


class FamilySpecSerializer(serializers.Serializer):
    name = serializers.ChoiceField(choices=FAMILY_NAMES)
    n = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    m = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def create(self, validated_data):
        return FamilySpec(**validated_data)


class PathSystemSpecSerializer(serializers.Serializer):
    """Replayable sampler settings, echoed in fuzz reports"""
    pattern = GraphSerializer()
    seed = serializers.IntegerField(default=0)
    max_internal = serializers.IntegerField(
        min_value=0, default=2, validators=[validate_even])
    extra_edge_prob = serializers.FloatField(default=0.0, validators=[validate_probability])
    kempe_complete = serializers.BooleanField(default=False)

    def create(self, validated_data):
        pattern = validated_data.pop('pattern')
        graph = Graph.from_edges(pattern['n'], pattern['edges'])
        return PathSystemSpec(pattern=graph, **validated_data)
