#!/usr/bin/env python
# encoding: utf-8
"""
gt_email.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Mail helpers for long searches: send the finished report, or the traceback when a
run dies. SMTP settings come from the environment at send time:

    GOLAY_SMTP_SERVER (127.0.0.1), GOLAY_SMTP_PORT (25), GOLAY_SMTP_USER,
    GOLAY_SMTP_PASSWORD, GOLAY_MAILFROM (nobody@example.com)
"""

import logging
import os
import smtplib
from email.mime.text import MIMEText

log = logging.getLogger(__name__)

DEFAULT_SMTP_SERVER = "127.0.0.1"
DEFAULT_SMTP_PORT = 25
DEFAULT_MAILFROM = "nobody@example.com"


def mail_settings() -> dict:
    return {
        'server': os.environ.get('GOLAY_SMTP_SERVER', DEFAULT_SMTP_SERVER),
        'port': int(os.environ.get('GOLAY_SMTP_PORT', DEFAULT_SMTP_PORT)),
        'user': os.environ.get('GOLAY_SMTP_USER'),
        'password': os.environ.get('GOLAY_SMTP_PASSWORD'),
        'mailfrom': os.environ.get('GOLAY_MAILFROM', DEFAULT_MAILFROM),
    }


def email(email, message, subject, cc=None):
    if not email:
        raise ValueError("no recipient address given")
    settings = mail_settings()
    msg = MIMEText(message.strip())
    msg['Subject'] = subject
    msg['From'] = settings['mailfrom']
    msg['To'] = email

    to_addr = [email]
    if cc:
        msg['CC'] = ",".join(cc)
        to_addr += cc

    # Local relay takes plain SMTP, anything else gets TLS and a login
    if settings['server'] != DEFAULT_SMTP_SERVER or settings['port'] != DEFAULT_SMTP_PORT:
        server = smtplib.SMTP(settings['server'], settings['port'])
        server.ehlo()
        server.starttls()
        server.login(settings['user'], settings['password'])
    else:
        server = smtplib.SMTP(settings['server'])
    try:
        server.sendmail(settings['mailfrom'], to_addr, msg.as_string())
    finally:
        server.quit()
    log.debug("Mailed %r to %s", subject, email)


def format_report(report: dict) -> str:
    """Plain text body for a search report dict."""
    lines = ["Periodic Golay search, v=%d m=%d" % (report['v'], report['m']), ""]
    lines.append("%d inequivalent pair(s) found" % report['pairs_found'])
    for pair in report['pairs']:
        lines.append("  A %s" % pair['a'])
        lines.append("  B %s" % pair['b'])
    lines.append("")
    for key, value in report['stats'].items():
        lines.append("%-14s %d" % (key, value))
    return "\n".join(lines)


def notify(address, report: dict):
    email(email=address, message=format_report(report), subject="Golay search v=%d: %d pair(s)"
          % (report['v'], report['pairs_found']))


def mail_exception(address, trace: str):
    message = "There was a problem during a golaytools run:\n\n"
    message += trace
    message += "\nPlease investigate."
    email(email=address, message=message, subject="golaytools error")
