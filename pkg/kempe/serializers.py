from rest_framework import serializers

from graphs.models import Graph
from graphs.serializers import GraphSerializer
from utils.base.constants import MAX_CLASSES
from utils.base.exceptions import InstanceError

from .models import ColoredInstance


def instance_error_detail(exc: InstanceError):
    """Serializer error tree for an instance validation failure"""
    if exc.index is None:
        return {exc.field or 'non_field_errors': [exc.message]}
    return {exc.field: {exc.index: [exc.message]}}


class InstanceSerializer(serializers.Serializer):
    """
    Instance document ``{"graph": {...}, "classes": [[v, ...], ...],
    "transversal": [v, ...]}``. `save()` returns a `ColoredInstance`.
    """
    graph = GraphSerializer()
    classes = serializers.ListField(
        source='class_lists',
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)),
        max_length=MAX_CLASSES)
    transversal = serializers.ListField(
        source='reps', child=serializers.IntegerField(min_value=0))

    def validate(self, attrs):
        graph_data = attrs['graph']
        graph = Graph.from_edges(graph_data['n'], graph_data['edges'])
        try:
            attrs['instance'] = ColoredInstance.build(
                graph, attrs['class_lists'], attrs['reps'])
        except InstanceError as exc:
            raise serializers.ValidationError(instance_error_detail(exc))
        return attrs

    def create(self, validated_data):
        return validated_data['instance']


class KempeChainSerializer(serializers.Serializer):
    class_a = serializers.IntegerField()
    class_b = serializers.IntegerField()
    vertices = serializers.SerializerMethodField()

    def get_vertices(self, obj):
        return sorted(obj.vertices)


class HGraphSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    edges = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()))
    reps = serializers.ListField(child=serializers.IntegerField())
    kempe_coloring = serializers.BooleanField()
    connected_pairs = serializers.IntegerField(min_value=0)
    chains = KempeChainSerializer(many=True, required=False)
