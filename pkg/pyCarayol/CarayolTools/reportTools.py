import re
import unicodedata

def reportize( name, type = 'key' ) :
    '''
    Normalize a free-text name.

    type = 'key' gives a snake_case key, type = 'header' an upper-case header.
    '''

    name = unicodedata.normalize('NFKD', name )

    name = name.encode('ASCII', 'ignore').decode('utf8')

    name = re.sub(r'\W+','_', name ).strip('_') # keeps only alphanumeric or underscore

    if type == 'key' :
        name = name.lower()

    elif type == 'header' :
        name = ' '.join( ' '.join( name.split('_') ).split() ).upper()

    return name

def headerFrame( header ) :
    text = '\n#############################\n'
    text += '#\n'
    text += '#    ' + reportize( header, type = 'header' ) + '\n'
    text += '#\n'
    text += '#############################\n\n'
    return text

def status_word( passed ) :
    if passed :
        return 'PASS'
    return 'FAIL'

def report_lines( items, width = None ) :
    '''
    Align a list of ( key, value ) pairs into text lines.
    '''

    items = list( items )

    if width is None :
        try :
            width = max( len( str(key) ) for key, _ in items )
        except ValueError : # empty
            width = 0

    return '\n'.join( str(key).ljust( width ) + '  ' + str(value) for key, value in items ) + '\n'

