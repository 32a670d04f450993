package alpha ;

/** Generated class AlphaBase. */
public abstract class AlphaBase {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private static int s0 = 0 ;
    public int shared = 1 ;

    public AlphaBase ( ) { }
    public AlphaBase ( int a ) { f0 = a ; }
    public int getF1 ( ) { return f1 ; }
    public void setF1 ( int v ) { this . f1 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public abstract int area ( int s ) ;
    static int twice ( int t ) { return t * s0 ; }

    /** Work item 0. */
    public void work0 ( int p0 , int p1 , int p2 ) {
        int v = 0 ;
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        case 2 :
        v = v + 3 ;
        break ;
        default :
        v = 0 ;
        }
    }

    /** Work item 1. */
    private void work1 ( int p0 , int p1 ) {
        int v = 0 ;
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
    }
}
