from rest_framework import serializers

from utils.base.constants import MAX_GRAPH_VERTICES

from .models import Graph


class EdgeField(serializers.ListField):
    child = serializers.IntegerField(min_value=0)

    def __init__(self, **kwargs):
        kwargs.setdefault('min_length', 2)
        kwargs.setdefault('max_length', 2)
        super().__init__(**kwargs)


class GraphSerializer(serializers.Serializer):
    """
    Graph document ``{"n": int, "edges": [[u, v], ...]}``.
    Every edge must satisfy u < v and appear once.
    """
    n = serializers.IntegerField(min_value=0, max_value=MAX_GRAPH_VERTICES)
    edges = serializers.ListField(child=EdgeField(), allow_empty=True)

    def validate(self, attrs):
        n = attrs['n']
        seen = set()
        for index, (u, v) in enumerate(attrs['edges']):
            if u >= n or v >= n:
                raise serializers.ValidationError({'edges': {index: [
                    f"vertex index out of range for {n} vertices"]}})
            if u == v:
                raise serializers.ValidationError({'edges': {index: [
                    f"self-loop at {u}"]}})
            key = (min(u, v), max(u, v))
            if key in seen:
                raise serializers.ValidationError({'edges': {index: [
                    f"duplicate edge {key[0]}-{key[1]}"]}})
            if u > v:
                raise serializers.ValidationError({'edges': {index: [
                    'edge must be written with u < v']}})
            seen.add(key)
        return attrs

    def create(self, validated_data):
        return Graph.from_edges(validated_data['n'], validated_data['edges'])
