from django.conf import settings
from rest_framework.renderers import (INDENT_SEPARATORS, LONG_SEPARATORS,
                                      SHORT_SEPARATORS, JSONRenderer)
from rest_framework.utils import json

from .crypto import hash_digest


class ReportRenderer(JSONRenderer):
    """
    Renders console reports. Every report is wrapped in a header that
    names the command, the seed and a digest of the input so a
    published result can be replayed.
    """

    def render(self, data, accepted_media_type=None, renderer_context=None):
        """
        Render `data` into JSON, returning a bytestring.

        Used restframework main code and edited it
        """
        renderer_context = renderer_context or {}

        if data is None:
            return b''

        data = {
            'tool': settings.APP_NAME,
            'command': renderer_context.get('command', ''),
            'seed': renderer_context.get('seed', 0),
            'digest': renderer_context.get('digest') or hash_digest(
                renderer_context.get('input', '')),
            'status': renderer_context.get('status', 0),
            'report': data,
        }

        indent = self.get_indent(accepted_media_type, renderer_context)

        if indent is None:
            separators = SHORT_SEPARATORS if self.compact else LONG_SEPARATORS
        else:
            separators = INDENT_SEPARATORS

        ret = json.dumps(
            data, cls=self.encoder_class,
            indent=indent, ensure_ascii=self.ensure_ascii,
            allow_nan=not self.strict, separators=separators
        )

        ret = ret.replace('\u2028', '\\u2028').replace('\u2029', '\\u2029')
        return ret.encode()

    def get_indent(self, accepted_media_type, renderer_context):
        return renderer_context.get('indent', 2)
